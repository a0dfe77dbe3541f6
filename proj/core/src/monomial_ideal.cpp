#include "kz/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "kz/errors.hpp"

namespace kz {

MonomialIdeal MonomialIdeal::from_generators(VariableSpace space, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.nvars() != space.count())
      throw space_mismatch_error("MonomialIdeal: generator does not match variable space");
  MonomialIdeal ideal;
  ideal.space_ = std::move(space);
  ideal.gens_ = minimalize(std::move(gens));
  return ideal;
}

MonomialIdeal MonomialIdeal::unit_ideal(VariableSpace space) {
  int n = space.count();
  return from_generators(std::move(space), {Monomial::unit(n)});
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.nvars() != nvars()) throw space_mismatch_error("MonomialIdeal::contains: wrong variable count");
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

int MonomialIdeal::max_exponent(int v) const {
  int c = 0;
  for (const auto& g : gens_) c = std::max(c, g.exponent(v));
  return c;
}

std::vector<int> MonomialIdeal::exponent_bounds() const {
  std::vector<int> c(static_cast<size_t>(nvars()), 0);
  for (const auto& g : gens_)
    for (int v = 0; v < nvars(); ++v)
      c[static_cast<size_t>(v)] = std::max(c[static_cast<size_t>(v)], g.exponent(v));
  return c;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // sort by total degree so divisors are seen before their multiples
  std::vector<Monomial> by_degree = gens;
  std::stable_sort(by_degree.begin(), by_degree.end(), [](const Monomial& a, const Monomial& b) {
    return a.total_degree() < b.total_degree();
  });
  std::vector<Monomial> kept;
  for (const auto& m : by_degree) {
    bool redundant = false;
    for (const auto& k : kept)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, int k) {
  if (k < 0) throw std::invalid_argument("ideal_power: negative exponent");
  if (k == 0) return MonomialIdeal::unit_ideal(ideal.space());
  if (ideal.is_zero()) return ideal;
  const auto& gens = ideal.generators();
  std::vector<Monomial> products;
  // all multisets of size k over the generators
  std::vector<int> pick(static_cast<size_t>(k), 0);
  Monomial unit = Monomial::unit(ideal.nvars());
  for (;;) {
    Monomial prod = unit;
    for (int idx : pick) prod = prod * gens[static_cast<size_t>(idx)];
    products.push_back(std::move(prod));
    // next nondecreasing tuple
    int pos = k - 1;
    while (pos >= 0 && pick[static_cast<size_t>(pos)] == static_cast<int>(gens.size()) - 1) --pos;
    if (pos < 0) break;
    int next = pick[static_cast<size_t>(pos)] + 1;
    for (int t = pos; t < k; ++t) pick[static_cast<size_t>(t)] = next;
  }
  return MonomialIdeal::from_generators(ideal.space(), std::move(products));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& u : ideal.generators()) gens.push_back(u / gcd(u, m));
  return MonomialIdeal::from_generators(ideal.space(), std::move(gens));
}

MonomialIdeal substitute_zero(const MonomialIdeal& ideal, int v) {
  if (v < 0 || v >= ideal.nvars()) throw std::out_of_range("substitute_zero: variable out of range");
  std::vector<Monomial> gens;
  for (const auto& u : ideal.generators())
    if (u.exponent(v) == 0) gens.push_back(u);
  return MonomialIdeal::from_generators(ideal.space(), std::move(gens));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.space() != b.space()) throw space_mismatch_error("ideal_sum: different variable spaces");
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::from_generators(a.space(), std::move(gens));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const Monomial& extra) {
  std::vector<Monomial> gens = a.generators();
  gens.push_back(extra);
  return MonomialIdeal::from_generators(a.space(), std::move(gens));
}

Monomial polarize_monomial(const Monomial& u, const VariableSpace& target) {
  std::vector<int> e(static_cast<size_t>(target.count()), 0);
  for (int i = 0; i < u.nvars(); ++i) {
    int a = u.exponent(i);
    const auto& slots = target.split_of(i);
    if (a > static_cast<int>(slots.size()))
      throw std::invalid_argument("polarize_monomial: exponent exceeds split width of " +
                                  std::to_string(a));
    for (int j = 0; j < a; ++j) e[static_cast<size_t>(slots[static_cast<size_t>(j)])] = 1;
  }
  return Monomial(std::move(e));
}

std::pair<MonomialIdeal, VariableSpace> polarize_ideal(const MonomialIdeal& ideal) {
  std::vector<int> widths = ideal.exponent_bounds();
  VariableSpace target = VariableSpace::polarized(ideal.space(), widths);
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& u : ideal.generators()) gens.push_back(polarize_monomial(u, target));
  MonomialIdeal out = MonomialIdeal::from_generators(target, std::move(gens));
  if (out.generator_count() != ideal.generator_count())
    throw std::logic_error("polarize_ideal: generator count changed");
  return {std::move(out), std::move(target)};
}

MonomialIdeal depolarize_ideal(const MonomialIdeal& ideal, const VariableSpace& source) {
  const VariableSpace& polar = ideal.space();
  if (!polar.is_polarized() || polar.source_count() != source.count())
    throw std::invalid_argument("depolarize_ideal: space is not a polarization of the source");
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<int> e(static_cast<size_t>(source.count()), 0);
    for (int i = 0; i < source.count(); ++i)
      for (int slot : polar.split_of(i)) e[static_cast<size_t>(i)] += g.exponent(slot);
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::from_generators(source, std::move(gens));
}

std::pair<MonomialIdeal, VariableSpace> one_step_polarize_ideal(const MonomialIdeal& ideal, int var,
                                                                std::string fresh_label) {
  if (var < 0 || var >= ideal.nvars()) throw std::out_of_range("one_step_polarize_ideal: variable");
  if (fresh_label.empty()) {
    fresh_label = "y";
    for (int suffix = 2; ideal.space().index_of(fresh_label) >= 0; ++suffix)
      fresh_label = "y" + std::to_string(suffix);
  } else if (ideal.space().index_of(fresh_label) >= 0) {
    throw std::invalid_argument("one_step_polarize_ideal: fresh label already used");
  }
  std::vector<std::string> labels = ideal.space().labels();
  labels.push_back(fresh_label);
  VariableSpace bigger(std::move(labels));
  int fresh = bigger.count() - 1;

  std::vector<Monomial> gens;
  for (const auto& u : ideal.generators()) {
    std::vector<int> e = u.exponents();
    e.push_back(0);
    if (u.exponent(var) >= 2) {
      --e[static_cast<size_t>(var)];
      e[static_cast<size_t>(fresh)] = 1;
    }
    gens.emplace_back(std::move(e));
  }
  return {MonomialIdeal::from_generators(bigger, std::move(gens)), std::move(bigger)};
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, uint64_t cap) {
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> frontier;
  Monomial unit = Monomial::unit(ideal.nvars());
  seen.insert(unit);
  frontier.push_back(unit);
  for (const auto& g : ideal.generators())
    if (seen.insert(g).second) frontier.push_back(g);

  std::vector<Monomial> next;
  while (!frontier.empty()) {
    next.clear();
    for (const auto& m : frontier) {
      for (const auto& g : ideal.generators()) {
        Monomial j = lcm(m, g);
        if (seen.insert(j).second) {
          if (seen.size() > cap)
            throw capacity_error(
                "lcm_lattice: closure exceeds cap of " + std::to_string(cap) +
                "; use the per-variable exponent box candidates instead");
          next.push_back(std::move(j));
        }
      }
    }
    frontier.swap(next);
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_exponent_box_candidate(const MonomialIdeal& ideal,
                                     const std::function<bool(const Monomial&)>& fn) {
  int n = ideal.nvars();
  std::vector<std::vector<int>> values(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto& vals = values[static_cast<size_t>(v)];
    vals.push_back(0);
    for (const auto& g : ideal.generators()) vals.push_back(g.exponent(v));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  }
  // descending odometer: deepest candidates first
  std::vector<size_t> idx(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) idx[static_cast<size_t>(v)] = values[static_cast<size_t>(v)].size() - 1;
  std::vector<int> e(static_cast<size_t>(n));
  for (;;) {
    for (int v = 0; v < n; ++v) e[static_cast<size_t>(v)] = values[static_cast<size_t>(v)][idx[static_cast<size_t>(v)]];
    if (!fn(Monomial(e))) return;
    int pos = n - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == 0) --pos;
    if (pos < 0) return;
    --idx[static_cast<size_t>(pos)];
    for (int v = pos + 1; v < n; ++v) idx[static_cast<size_t>(v)] = values[static_cast<size_t>(v)].size() - 1;
  }
}

bool is_lcm_of_generators(const MonomialIdeal& ideal, const Monomial& a) {
  if (a.is_unit()) return true;  // empty join
  std::vector<int> acc(static_cast<size_t>(a.nvars()), 0);
  bool any = false;
  for (const auto& g : ideal.generators()) {
    if (!g.divides(a)) continue;
    any = true;
    for (int v = 0; v < a.nvars(); ++v)
      acc[static_cast<size_t>(v)] = std::max(acc[static_cast<size_t>(v)], g.exponent(v));
  }
  if (!any) return false;
  for (int v = 0; v < a.nvars(); ++v)
    if (acc[static_cast<size_t>(v)] != a.exponent(v)) return false;
  return true;
}

}  // namespace kz
