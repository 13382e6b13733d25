#ifndef SYLGEN_REPORT_REPORT_HPP
#define SYLGEN_REPORT_REPORT_HPP

#include <filesystem>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sylgen/budget.hpp"
#include "sylgen/classical/spec.hpp"
#include "sylgen/overgroup/overgroup.hpp"
#include "sylgen/perm/blocks.hpp"
#include "sylgen/perm/conjugacy.hpp"
#include "sylgen/perm/group.hpp"

namespace sylgen::report
{

// Sorted keys, two-space indent, trailing newline. Throws ParseError if the
// document holds a floating point number.
std::string report_serialize(nlohmann::json const &doc);

// Budget names as in Budgets; throws ParseError on unknown keys or bad values.
void set_budget(Budgets &b, std::string const &key, std::string const &value);
// key = value lines, '#' or ';' comments
Budgets load_budgets(std::filesystem::path const &file, Budgets base = default_budgets());

struct CacheEntry
{
  std::string key;  // group spec and Sylow parameters
  std::size_t degree = 0;
  std::vector<perm::Perm> gens;
  std::vector<perm::PermGroup::StoredLevel> chain;
  std::vector<perm::Perm> sylow_gens;
  std::vector<perm::PermGroup::StoredLevel> sylow_chain;
  std::vector<std::uint32_t> class_of_rank;  // empty when not computed
  std::optional<std::vector<perm::Block>> blocks;
};

std::string encode_cache(CacheEntry const &e);
// throws ChecksumMismatch on bad magic, truncation or checksum failure
CacheEntry decode_cache(std::string const &bytes);

// Directory of "sylgen-cache-v1" files, one per key.
class Cache
{
public:
  explicit Cache(std::filesystem::path dir);
  // from SYLGEN_CACHE_DIR, if set and nonempty
  static std::optional<Cache> from_env();

  std::filesystem::path const &dir() const
  { return _dir; }
  std::filesystem::path path_for(std::string const &key) const;
  // nullopt when absent, corrupt or keyed differently; corruption is noted in *warning
  std::optional<CacheEntry> load(std::string const &key, std::string *warning = nullptr) const;
  // write to a temporary file, then rename; throws IoError
  void store(CacheEntry const &e) const;

private:
  std::filesystem::path _dir;
};

// A group with its Sylow 2-subgroup and lazily computed class table and
// overgroup lattice, backed by an optional cache.
class Workspace
{
public:
  Workspace(std::string const &spec_text, std::uint64_t sylow_seed, Budgets const &budgets,
            std::optional<Cache> cache, std::ostream *warnings = nullptr);

  classical::GroupSpec const &spec() const
  { return _spec; }
  std::string const &key() const
  { return _key; }
  perm::PermGroup const &G() const
  { return _G; }
  perm::PermGroup const &P() const
  { return _P; }
  perm::ConjClassTable const &classes();
  overgroup::OvergroupLattice const &lattice();
  bool from_cache() const
  { return _from_cache; }
  // stores the entry when something new was computed
  void flush();

private:
  classical::GroupSpec _spec;
  std::string _key;
  Budgets _budgets;
  std::optional<Cache> _cache;
  std::ostream *_warn;
  perm::PermGroup _G, _P;
  std::optional<perm::ConjClassTable> _classes;
  std::optional<std::vector<perm::Block>> _blocks;
  std::unique_ptr<overgroup::OvergroupLattice> _lattice;
  bool _from_cache = false;
  bool _dirty = false;
};

} // namespace sylgen::report

#endif // SYLGEN_REPORT_REPORT_HPP
