#include "sylgen/report/report.hpp"

#include <boost/crc.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <unistd.h>

#include "sylgen/classical/actions.hpp"
#include "sylgen/error.hpp"
#include "sylgen/sylow/sylow.hpp"

namespace sylgen::report
{

namespace
{

void reject_floats(nlohmann::json const &j)
{
  if (j.is_number_float())
    throw Error(ErrorKind::ParseError, "report holds a floating point value");
  if (j.is_structured())
    for (auto const &v : j)
      reject_floats(v);
}

std::map<std::string, std::uint64_t Budgets::*> const &budget_fields()
{
  static std::map<std::string, std::uint64_t Budgets::*> const f = {
      {"degree_cap", &Budgets::degree_cap},
      {"coset_degree_cap", &Budgets::coset_degree_cap},
      {"class_order_cap", &Budgets::class_order_cap},
      {"class_degree_cap", &Budgets::class_degree_cap},
      {"orbit_cap", &Budgets::orbit_cap},
      {"subgroup_elements_cap", &Budgets::subgroup_elements_cap},
      {"overgroup_cap", &Budgets::overgroup_cap},
      {"samples", &Budgets::samples},
      {"sylow_samples", &Budgets::sylow_samples},
      {"transversal_cap", &Budgets::transversal_cap},
      {"projective_cap", &Budgets::projective_cap},
  };
  return f;
}

constexpr char kMagic[] = "sylgen-cache-v1\n";
constexpr std::size_t kMagicLen = sizeof(kMagic) - 1;

struct Writer
{
  std::string buf;

  void u64(std::uint64_t v)
  {
    for (int i = 0; i < 8; ++i)
      buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  void u32(std::uint32_t v)
  {
    for (int i = 0; i < 4; ++i)
      buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  void str(std::string const &s)
  {
    u64(s.size());
    buf += s;
  }
  void perm(perm::Perm const &p)
  {
    for (auto x : p.images())
      u32(x);
  }
  void perms(std::vector<perm::Perm> const &ps)
  {
    u64(ps.size());
    for (auto const &p : ps)
      perm(p);
  }
  void chain(std::vector<perm::PermGroup::StoredLevel> const &c)
  {
    u64(c.size());
    for (auto const &l : c) {
      u32(l.base);
      perms(l.gens);
    }
  }
};

struct Reader
{
  std::string const &buf;
  std::size_t pos;
  std::size_t end;

  void need(std::uint64_t n)
  {
    if (n > end - pos)
      throw Error(ErrorKind::ChecksumMismatch, "cache file truncated");
  }
  std::uint64_t u64()
  {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
      v |= std::uint64_t(static_cast<unsigned char>(buf[pos + i])) << (8 * i);
    pos += 8;
    return v;
  }
  std::uint32_t u32()
  {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
      v |= std::uint32_t(static_cast<unsigned char>(buf[pos + i])) << (8 * i);
    pos += 4;
    return v;
  }
  std::string str()
  {
    auto n = u64();
    need(n);
    std::string s = buf.substr(pos, n);
    pos += n;
    return s;
  }
  perm::Perm perm(std::size_t degree)
  {
    need(std::uint64_t(4) * degree);
    std::vector<perm::Point> img(degree);
    for (auto &x : img)
      x = u32();
    try {
      return perm::Perm(std::move(img));
    } catch (Error const &) {
      throw Error(ErrorKind::ChecksumMismatch, "cache holds a non-permutation");
    }
  }
  std::vector<perm::Perm> perms(std::size_t degree)
  {
    auto n = u64();
    need(n);
    std::vector<perm::Perm> ps;
    for (std::uint64_t i = 0; i < n; ++i)
      ps.push_back(perm(degree));
    return ps;
  }
  std::vector<perm::PermGroup::StoredLevel> chain(std::size_t degree)
  {
    auto n = u64();
    need(n);
    std::vector<perm::PermGroup::StoredLevel> c;
    for (std::uint64_t i = 0; i < n; ++i) {
      perm::PermGroup::StoredLevel l;
      l.base = u32();
      l.gens = perms(degree);
      c.push_back(std::move(l));
    }
    return c;
  }
};

std::uint32_t crc_of(char const *data, std::size_t n)
{
  boost::crc_32_type crc;
  crc.process_bytes(data, n);
  return crc.checksum();
}

} // namespace

std::string report_serialize(nlohmann::json const &doc)
{
  reject_floats(doc);
  return doc.dump(2) + "\n";
}

void set_budget(Budgets &b, std::string const &key, std::string const &value)
{
  auto const &f = budget_fields();
  auto it = f.find(key);
  if (it == f.end())
    throw Error(ErrorKind::ParseError, "unknown budget '" + key + "'");
  std::uint64_t v = 0;
  std::size_t used = 0;
  try {
    v = std::stoull(value, &used);
  } catch (std::exception const &) {
    used = 0;
  }
  if (used == 0 || used != value.size() || value[0] == '-')
    throw Error(ErrorKind::ParseError, "budget '" + key + "' needs a nonnegative integer, got '" + value + "'");
  b.*(it->second) = v;
}

Budgets load_budgets(std::filesystem::path const &file, Budgets base)
{
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(file.string(), tree);
  } catch (boost::property_tree::ini_parser_error const &e) {
    throw Error(ErrorKind::ParseError, std::string("config: ") + e.what());
  }
  for (auto const &[k, v] : tree) {
    if (!v.empty())
      throw Error(ErrorKind::ParseError, "config: sections are not supported ('" + k + "')");
    set_budget(base, k, v.data());
  }
  return base;
}

std::string encode_cache(CacheEntry const &e)
{
  Writer w;
  w.str(e.key);
  w.u64(e.degree);
  w.perms(e.gens);
  w.chain(e.chain);
  w.perms(e.sylow_gens);
  w.chain(e.sylow_chain);
  w.u64(e.class_of_rank.size());
  for (auto c : e.class_of_rank)
    w.u32(c);
  w.u64(e.blocks ? 1 : 0);
  if (e.blocks) {
    w.u64(e.blocks->size());
    for (auto const &b : *e.blocks) {
      w.u64(b.size());
      for (auto x : b)
        w.u32(x);
    }
  }
  std::string out(kMagic, kMagicLen);
  out += w.buf;
  std::uint32_t crc = crc_of(w.buf.data(), w.buf.size());
  for (int i = 0; i < 4; ++i)
    out.push_back(static_cast<char>((crc >> (8 * i)) & 0xff));
  return out;
}

CacheEntry decode_cache(std::string const &bytes)
{
  if (bytes.size() < kMagicLen + 4 || bytes.compare(0, kMagicLen, kMagic) != 0)
    throw Error(ErrorKind::ChecksumMismatch, "not a sylgen-cache-v1 file");
  std::size_t end = bytes.size() - 4;
  std::uint32_t stored = 0;
  for (int i = 0; i < 4; ++i)
    stored |= std::uint32_t(static_cast<unsigned char>(bytes[end + i])) << (8 * i);
  if (crc_of(bytes.data() + kMagicLen, end - kMagicLen) != stored)
    throw Error(ErrorKind::ChecksumMismatch, "cache checksum mismatch");
  Reader r{bytes, kMagicLen, end};
  CacheEntry e;
  e.key = r.str();
  e.degree = r.u64();
  e.gens = r.perms(e.degree);
  e.chain = r.chain(e.degree);
  e.sylow_gens = r.perms(e.degree);
  e.sylow_chain = r.chain(e.degree);
  auto nc = r.u64();
  r.need(4 * nc);
  e.class_of_rank.resize(nc);
  for (auto &c : e.class_of_rank)
    c = r.u32();
  if (r.u64()) {
    auto nb = r.u64();
    r.need(nb);
    std::vector<perm::Block> blocks(nb);
    for (auto &b : blocks) {
      auto sz = r.u64();
      r.need(4 * sz);
      b.resize(sz);
      for (auto &x : b)
        x = r.u32();
    }
    e.blocks = std::move(blocks);
  }
  if (r.pos != end)
    throw Error(ErrorKind::ChecksumMismatch, "trailing bytes in cache file");
  return e;
}

Cache::Cache(std::filesystem::path dir)
: _dir(std::move(dir))
{
}

std::optional<Cache> Cache::from_env()
{
  char const *d = std::getenv("SYLGEN_CACHE_DIR");
  if (!d || !*d)
    return std::nullopt;
  return Cache(d);
}

std::filesystem::path Cache::path_for(std::string const &key) const
{
  std::string name;
  for (char c : key)
    name.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  boost::crc_32_type crc;
  crc.process_bytes(key.data(), key.size());
  std::ostringstream os;
  os << name << '-' << std::hex << crc.checksum() << ".cache";
  return _dir / os.str();
}

std::optional<CacheEntry> Cache::load(std::string const &key, std::string *warning) const
{
  auto path = path_for(key);
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return std::nullopt;
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    auto e = decode_cache(bytes);
    if (e.key != key) {
      if (warning)
        *warning = "cache " + path.string() + " is keyed '" + e.key + "', ignored";
      return std::nullopt;
    }
    return e;
  } catch (Error const &err) {
    if (warning)
      *warning = "cache " + path.string() + ": " + err.what() + ", recomputing";
    return std::nullopt;
  }
}

void Cache::store(CacheEntry const &e) const
{
  std::error_code ec;
  std::filesystem::create_directories(_dir, ec);
  auto path = path_for(e.key);
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw Error(ErrorKind::IoError, "cannot write " + tmp.string());
    auto bytes = encode_cache(e);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
      throw Error(ErrorKind::IoError, "short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorKind::IoError, "cannot rename into " + path.string());
  }
}

Workspace::Workspace(std::string const &spec_text, std::uint64_t sylow_seed, Budgets const &budgets,
                     std::optional<Cache> cache, std::ostream *warnings)
: _spec(classical::parse_group_spec(spec_text)),
  _budgets(budgets),
  _cache(std::move(cache)),
  _warn(warnings)
{
  _key = _spec.str() + "|p=2|seed=" + std::to_string(sylow_seed);
  if (_cache) {
    std::string warning;
    auto e = _cache->load(_key, &warning);
    if (!warning.empty() && _warn)
      *_warn << "warning: " << warning << "\n";
    if (e) {
      try {
        _G = perm::PermGroup::from_chain(e->gens, e->degree, e->chain, budgets);
        _P = perm::PermGroup::from_chain(e->sylow_gens, e->degree, e->sylow_chain, budgets);
        if (_G.order() != classical::expected_order(_spec))
          throw Error(ErrorKind::ChecksumMismatch, "cached group has the wrong order");
        if (!e->class_of_rank.empty())
          _classes = perm::ConjClassTable::from_parts(_G, std::move(e->class_of_rank));
        _blocks = std::move(e->blocks);
        _from_cache = true;
      } catch (Error const &err) {
        if (_warn)
          *_warn << "warning: cache: " << err.what() << ", recomputing\n";
        _classes.reset();
        _blocks.reset();
      }
    }
  }
  if (!_from_cache) {
    _G = classical::construct_group(_spec, budgets).group;
    _P = sylow::sylow_subgroup(_G, 2, sylow_seed, budgets).P;
    _dirty = true;
  }
}

perm::ConjClassTable const &Workspace::classes()
{
  if (!_classes) {
    _classes = perm::ConjClassTable::compute(_G, _budgets);
    _dirty = true;
  }
  return *_classes;
}

overgroup::OvergroupLattice const &Workspace::lattice()
{
  if (!_lattice) {
    if (_blocks) {
      _lattice = std::make_unique<overgroup::OvergroupLattice>(_G, _P, *_blocks, _budgets);
    } else {
      _lattice = std::make_unique<overgroup::OvergroupLattice>(_G, _P, _budgets);
      std::vector<perm::Block> blocks;
      for (auto const &H : _lattice->all())
        blocks.push_back(H.block);
      _blocks = std::move(blocks);
      _dirty = true;
    }
  }
  return *_lattice;
}

void Workspace::flush()
{
  if (!_cache || !_dirty)
    return;
  CacheEntry e;
  e.key = _key;
  e.degree = _G.degree();
  e.gens = _G.generators();
  e.chain = _G.chain();
  e.sylow_gens = _P.generators();
  e.sylow_chain = _P.chain();
  if (_classes)
    e.class_of_rank = _classes->class_of_rank_data();
  e.blocks = _blocks;
  try {
    _cache->store(e);
    _dirty = false;
  } catch (Error const &err) {
    if (_warn)
      *_warn << "warning: " << err.what() << "\n";
  }
}

} // namespace sylgen::report
