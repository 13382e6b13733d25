#include "sylgen/overgroup/overgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sylgen/algebra/counting.hpp"
#include "sylgen/error.hpp"

namespace sylgen::overgroup
{

using perm::Point;

OvergroupLattice::OvergroupLattice(PermGroup const &G, PermGroup const &P, Budgets const &budgets)
: _act(std::make_shared<CosetAction>(G, P, budgets))
{
  build(perm::blocks_through_zero(_act->generator_images(), _act->subgroup_images(), _act->degree(),
                                  budgets));
}

OvergroupLattice::OvergroupLattice(PermGroup const &G, PermGroup const &P, std::vector<Block> const &blocks,
                                   Budgets const &budgets)
: _act(std::make_shared<CosetAction>(G, P, budgets))
{
  build(blocks);
}

void OvergroupLattice::build(std::vector<Block> blocks)
{
  auto const &act = *_act;
  std::size_t D = act.degree();
  blocks.erase(std::remove_if(blocks.begin(), blocks.end(), [&](Block const &b) { return b.size() == D; }),
               blocks.end());
  std::stable_sort(blocks.begin(), blocks.end(), [](Block const &a, Block const &b) {
    return a.size() < b.size();
  });

  BigInt pord = act.subgroup().order();
  for (auto const &b : blocks) {
    if (b.empty() || b[0] != 0)
      throw Error(ErrorKind::ConstructionFailed, "block does not contain coset 0");
    OvergroupBlock H;
    H.block = b;
    H.order = pord * static_cast<unsigned long>(b.size());
    H.system = BlockSystem::from_block(act.generator_images(), D, b);

    // P plus one coset rep for each new orbit of <gens> inside the block
    H.gens = act.subgroup().generators();
    std::vector<Perm> images = act.subgroup_images();
    std::vector<char> in_block(D, 0), reached(D, 0);
    for (Point p : b)
      in_block[p] = 1;
    auto grow = [&](std::vector<Point> start) {
      for (Point p : start)
        reached[p] = 1;
      for (std::size_t k = 0; k < start.size(); ++k) {
        for (auto const &m : images) {
          Point y = m[start[k]];
          if (!reached[y]) {
            reached[y] = 1;
            start.push_back(y);
          }
        }
      }
    };
    grow({0});
    for (Point p : b) {
      if (reached[p])
        continue;
      H.gens.push_back(act.reps()[p]);
      images.push_back(act.action_of(act.reps()[p]));
      std::vector<Point> all;
      for (Point y = 0; y < D; ++y)
        if (reached[y])
          all.push_back(y);
      std::fill(reached.begin(), reached.end(), 0);
      all.push_back(p);
      grow(all);
    }
    for (Point y = 0; y < D; ++y)
      if (reached[y] != in_block[y])
        throw Error(ErrorKind::ConstructionFailed, "lifted generators leave the block");

    perm::BuildOptions opts;
    opts.order_bound = H.order;
    auto Hg = PermGroup::from_generators(H.gens, act.group().degree(), opts);
    if (Hg.order() != H.order)
      throw Error(ErrorKind::ConstructionFailed, "overgroup order certificate failed");
    _all.push_back(std::move(H));
  }

  for (std::size_t i = 0; i < _all.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < _all.size() && maximal; ++j) {
      if (_all[j].block.size() > _all[i].block.size() &&
          std::includes(_all[j].block.begin(), _all[j].block.end(), _all[i].block.begin(), _all[i].block.end()))
        maximal = false;
    }
    _all[i].maximal = maximal;
  }
}

std::vector<OvergroupBlock> OvergroupLattice::maximal() const
{
  std::vector<OvergroupBlock> res;
  for (auto const &H : _all)
    if (H.maximal)
      res.push_back(H);
  return res;
}

std::vector<OvergroupBlock> maximal_overgroups(PermGroup const &G, PermGroup const &P, Budgets const &budgets)
{
  return OvergroupLattice(G, P, budgets).maximal();
}

Rational fpr(Perm const &x_cosets, OvergroupBlock const &H)
{
  return make_rational(static_cast<unsigned long>(H.system.fixed_blocks(x_cosets)),
                       static_cast<unsigned long>(H.system.blocks.size()));
}

Rational fpr(CosetAction const &act, Perm const &x, OvergroupBlock const &H)
{
  return fpr(act.action_of(x), H);
}

Rational sigma(CosetAction const &act, Perm const &x, std::vector<OvergroupBlock> const &M)
{
  Perm xc = act.action_of(x);
  Rational s = 0;
  for (auto const &H : M)
    s += fpr(xc, H);
  return s;
}

SigmaReport sigma_table(OvergroupLattice const &lattice, perm::ConjClassTable const &classes,
                        std::string const &group_id)
{
  auto const &act = lattice.action();
  auto M = lattice.maximal();
  SigmaReport rep;
  rep.group = group_id;
  rep.order = act.group().order();
  rep.p_order = act.subgroup().order();
  for (auto const &H : lattice.all()) {
    rep.overgroup_orders.push_back(H.order);
    rep.overgroup_maximal.push_back(H.maximal);
  }
  bool first = true;
  for (std::uint32_t c = 0; c < classes.size(); ++c) {
    auto const &cls = classes.classes()[c];
    SigmaRow row;
    row.class_index = c;
    row.rep = cls.rep;
    row.size = cls.size;
    row.order = cls.order;
    Perm xc = act.action_of(cls.rep);
    row.sigma = 0;
    for (auto const &H : M) {
      row.fpr.push_back(fpr(xc, H));
      row.sigma += row.fpr.back();
    }
    if (!cls.rep.is_identity()) {
      if (first || row.sigma > rep.max_sigma) {
        rep.max_sigma = row.sigma;
        rep.attaining.clear();
      }
      if (row.sigma == rep.max_sigma)
        rep.attaining.push_back(c);
      for (auto const &f : row.fpr)
        if (first || f > rep.max_fpr)
          rep.max_fpr = f, first = false;
      first = false;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

SigmaReport sigma_table(PermGroup const &G, PermGroup const &P, std::string const &group_id,
                        Budgets const &budgets)
{
  OvergroupLattice lattice(G, P, budgets);
  auto classes = perm::ConjClassTable::compute(G, budgets);
  return sigma_table(lattice, classes, group_id);
}

nlohmann::json SigmaReport::to_json() const
{
  nlohmann::json j;
  j["schema"] = "sylgen-sigma-v1";
  j["group"] = group;
  j["order"] = to_string(order);
  j["sylow_order"] = to_string(p_order);
  j["overgroups"] = nlohmann::json::array();
  for (std::size_t i = 0; i < overgroup_orders.size(); ++i)
    j["overgroups"].push_back({{"order", to_string(overgroup_orders[i])}, {"maximal", bool(overgroup_maximal[i])}});
  j["rows"] = nlohmann::json::array();
  for (auto const &r : rows) {
    nlohmann::json row;
    row["class"] = r.class_index;
    row["representative"] = r.rep.str();
    row["size"] = std::to_string(r.size);
    row["element_order"] = r.order;
    row["fpr"] = nlohmann::json::array();
    for (auto const &f : r.fpr)
      row["fpr"].push_back(to_string(f));
    row["sigma"] = to_string(r.sigma);
    j["rows"].push_back(row);
  }
  j["max_sigma"] = to_string(max_sigma);
  j["max_fpr"] = to_string(max_fpr);
  j["attaining_classes"] = attaining;
  return j;
}

CountLemmaReport verify_count_lemma(OvergroupLattice const &lattice)
{
  auto const &act = lattice.action();
  auto M = lattice.maximal();
  auto fixed = act.fixed_by_subgroup();
  BigInt pord = act.subgroup().order();

  CountLemmaReport rep;
  rep.normalizer_order = pord * static_cast<unsigned long>(fixed.size());
  rep.index_in_G = act.group().order() / rep.normalizer_order;

  std::map<Block, std::uint32_t> index;
  for (std::uint32_t i = 0; i < M.size(); ++i)
    index[M[i].block] = i;

  // N_G(P) acts on the blocks: H^n = U P (n^-1 r_i n)
  std::vector<std::uint32_t> parent(M.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto j : fixed) {
    Perm const &n = act.reps()[j];
    Perm ninv = n.inverse();
    for (std::uint32_t i = 0; i < M.size(); ++i) {
      Block img;
      for (Point c : M[i].block)
        img.push_back(act.coset_of(ninv * act.reps()[c] * n));
      std::sort(img.begin(), img.end());
      auto it = index.find(img);
      if (it == index.end())
        throw Error(ErrorKind::ConjugacyUndecided, "normalizer image of an overgroup is not in the lattice");
      parent[find(i)] = find(it->second);
    }
  }

  std::map<std::uint32_t, std::vector<std::uint32_t>> orbits;
  for (std::uint32_t i = 0; i < M.size(); ++i)
    orbits[find(i)].push_back(i);
  for (auto const &[root, members] : orbits) {
    CountLemmaRow row;
    row.members = members;
    auto const &H = M[members.front()];
    row.order = H.order;
    row.observed = members.size();
    std::vector<char> in_block(act.degree(), 0);
    for (Point c : H.block)
      in_block[c] = 1;
    std::size_t count = 0;
    for (auto j : fixed)
      count += in_block[j];
    row.normalizer_in_H = pord * static_cast<unsigned long>(count);
    row.predicted = rep.normalizer_order / row.normalizer_in_H;
    row.match = row.predicted == row.observed;
    rep.all_match = rep.all_match && row.match;
    rep.rows.push_back(std::move(row));
  }
  std::sort(rep.rows.begin(), rep.rows.end(), [](CountLemmaRow const &a, CountLemmaRow const &b) {
    return a.members.front() < b.members.front();
  });
  return rep;
}

nlohmann::json CountLemmaReport::to_json() const
{
  nlohmann::json j;
  j["normalizer_order"] = to_string(normalizer_order);
  j["index_in_G"] = to_string(index_in_G);
  j["all_match"] = all_match;
  j["classes"] = nlohmann::json::array();
  for (auto const &r : rows) {
    j["classes"].push_back({{"members", r.members},
                            {"order", to_string(r.order)},
                            {"observed", r.observed},
                            {"normalizer_in_H", to_string(r.normalizer_in_H)},
                            {"predicted", to_string(r.predicted)},
                            {"match", r.match}});
  }
  return j;
}

Rational parabolic_sigma_semisimple(unsigned n, std::uint64_t q, unsigned d_minus, unsigned d_plus)
{
  if (d_minus + d_plus != n)
    throw Error(ErrorKind::RangeViolation, "eigenspace dimensions must sum to n");
  if (!is_prime_power(q))
    throw Error(ErrorKind::NonPrime, "q must be a prime power");
  Rational s = 0;
  for (unsigned m = 1; m < n; ++m)
    s += make_rational(algebra::invariant_mspace_count(d_minus, d_plus, m, q), algebra::gauss_binom(n, m, q));
  return s;
}

} // namespace sylgen::overgroup
