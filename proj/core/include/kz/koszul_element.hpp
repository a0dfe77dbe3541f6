#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kz/monomial.hpp"
#include "kz/monomial_ideal.hpp"
#include "kz/variable_space.hpp"

namespace kz {

/// Which module the coefficients of a Koszul element live in. Quotient
/// coefficients are reduced (terms with monomial inside the ideal vanish);
/// ideal coefficients must belong to the ideal; free coefficients are
/// unrestricted.
enum class ModuleKind { Free, Ideal, Quotient };

class CoefficientModule {
public:
  static CoefficientModule free_module(VariableSpace space) {
    return CoefficientModule(ModuleKind::Free, MonomialIdeal::zero(std::move(space)));
  }
  static CoefficientModule ideal_module(MonomialIdeal ideal) {
    return CoefficientModule(ModuleKind::Ideal, std::move(ideal));
  }
  static CoefficientModule quotient_module(MonomialIdeal ideal) {
    return CoefficientModule(ModuleKind::Quotient, std::move(ideal));
  }

  ModuleKind kind() const { return kind_; }
  const MonomialIdeal& ideal() const { return ideal_; }
  const VariableSpace& space() const { return ideal_.space(); }
  int nvars() const { return ideal_.nvars(); }

  /// may the monomial appear as a coefficient?
  bool admits(const Monomial& u) const {
    switch (kind_) {
      case ModuleKind::Free: return true;
      case ModuleKind::Ideal: return ideal_.contains(u);
      case ModuleKind::Quotient: return !ideal_.contains(u);
    }
    return false;
  }

  bool operator==(const CoefficientModule& o) const { return kind_ == o.kind_ && ideal_ == o.ideal_; }
  bool operator!=(const CoefficientModule& o) const { return !(*this == o); }

private:
  CoefficientModule(ModuleKind kind, MonomialIdeal ideal) : kind_(kind), ideal_(std::move(ideal)) {}
  ModuleKind kind_;
  MonomialIdeal ideal_;
};

/// index subsets J are bitmasks over the variable positions (nvars <= 64)
struct KoszulTermKey {
  Monomial u;
  uint64_t jmask = 0;

  bool operator==(const KoszulTermKey& o) const { return jmask == o.jmask && u == o.u; }
  bool operator<(const KoszulTermKey& o) const;
};

int popcount64(uint64_t m);
std::vector<int> mask_to_indices(uint64_t m);
uint64_t indices_to_mask(const std::vector<int>& idx);

/// An element sum lambda_J u_J e_J of the Koszul complex with coefficients in
/// a chosen module. Coefficients are exact integers; they are only reduced
/// mod p when an element enters a strand computation.
class KoszulElement {
public:
  explicit KoszulElement(CoefficientModule module) : module_(std::move(module)) {}

  static KoszulElement zero(CoefficientModule module) { return KoszulElement(std::move(module)); }
  /// single term lambda * u * e_J
  static KoszulElement term(CoefficientModule module, Monomial u, uint64_t jmask, int64_t coeff = 1);

  const CoefficientModule& module() const { return module_; }
  const VariableSpace& space() const { return module_.space(); }
  const std::map<KoszulTermKey, int64_t>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  /// adds with the module's coefficient rule (quotient terms reduce away,
  /// ideal membership is enforced)
  void add_term(const Monomial& u, uint64_t jmask, int64_t coeff);

  KoszulElement operator+(const KoszulElement& other) const;
  KoszulElement operator-() const;
  KoszulElement operator-(const KoszulElement& other) const { return *this + (-other); }
  KoszulElement scaled(int64_t c) const;
  bool operator==(const KoszulElement& other) const {
    return module_ == other.module_ && terms_ == other.terms_;
  }

  /// |J| common to all terms; -1 for the zero element, throws when mixed
  int homological_degree() const;

  /// multidegree of u e_J: exponents of u plus the indicator of J
  static Monomial term_multidegree(const Monomial& u, uint64_t jmask);
  /// common multidegree of all terms; throws when not multi-homogeneous,
  /// nullopt for the zero element
  std::optional<Monomial> multidegree() const;

  /// Koszul differential with the sign (-1)^(t+1) on the t-th index of J;
  /// coefficients follow this element's module rule
  KoszulElement boundary() const;
  /// differential with free coefficients (no quotient reduction); useful for
  /// lifting a quotient cycle to its ideal-coefficient boundary
  KoszulElement boundary_in_free() const;

  bool is_cycle() const { return boundary().is_zero(); }

  /// same terms, new module; enforces the target coefficient rule
  KoszulElement cast_to(CoefficientModule target) const;

  /// wedge product with the alternating sign rule; repeated indices vanish
  friend KoszulElement wedge(const KoszulElement& a, const KoszulElement& b,
                             const CoefficientModule& target);

private:
  CoefficientModule module_;
  std::map<KoszulTermKey, int64_t> terms_;
};

KoszulElement wedge(const KoszulElement& a, const KoszulElement& b, const CoefficientModule& target);

/// sign of merging two disjoint ascending index sets: parity of the number of
/// pairs (a, b), a in amask, b in bmask, with a > b
int wedge_sign(uint64_t amask, uint64_t bmask);

}  // namespace kz
