#pragma once

#include <memory>
#include <mutex>
#include <set>

#include "isodual/funcrep.hpp"
#include "isodual/ratio.hpp"

namespace isodual {

enum class TowerFamily { GS, BGS };

// Recursive tower descriptor.  Each step adjoins a root of
//   v^q + v = rhs(previous generator)
// after normalization; for the BGS family the public step variable y relates
// to the normalized generator z by y = z / rhs(x).
struct TowerDescriptor {
    TowerFamily family = TowerFamily::GS;
    int q = 0;                       // tower parameter; step degree = q
    const FieldCtx* constant_field = nullptr;
    Poly rhs_num, rhs_den;           // in the previous-level variable, constant coefficients
    bool normalized_step = false;    // BGS: public y = z / rhs(x)
    Rat gamma;                       // tower genus over F_0
    bool gamma_exact = false;        // BGS: exact; GS: upper bound
    // fallback pattern for wild poles the reduction cannot resolve
    int declared_e = 0, declared_f = 1, declared_d = 0;

    std::string name() const { return family == TowerFamily::GS ? "gs" : "bgs"; }
    // closed-form genus when the family has one (GS); -1 otherwise
    long long genus_formula(int level) const;
};

// Supported: (gs, q in {2,3,4}), (bgs, q = 2).  BGS with odd q is rejected:
// its different exponents are odd, which breaks the half-different lift.
TowerDescriptor make_tower(const std::string& name, int q);

enum class AnalysisSource { Computed, Declared };

// Decomposition record of one place relative to its parent.
struct PlaceData {
    int e = 1, f = 1, d = 0;
    AnalysisSource source = AnalysisSource::Computed;
    FieldElem root = 0;        // Root tag: fiber root in the parent residue field
    int pole_order = 0;        // ramified: pole order m of the reduced step function
    LaurentSeries w_total;     // accumulated reduction substitution at the parent (exact)
    bool has_reduction = false;
};

struct LociReport {
    std::vector<PlaceKey> split;     // rational level-0 places, completely split to depth
    std::vector<PlaceKey> ramified;  // level-0 places with e > 1 somewhere in the analyzed tree
};

class Level1Expansion;  // internal

// Per-tower analysis: place decomposition to depth <= 2, local expansions,
// conorm, different divisors, Riemann-Hurwitz genus, loci scans.  The
// decomposition cache is single-writer multi-reader: queries may extend it
// lazily under an internal lock; all returned data is immutable.
class TowerAnalysis {
  public:
    TowerAnalysis(TowerDescriptor desc, int depth = 2);
    ~TowerAnalysis();

    const TowerDescriptor& descriptor() const { return desc_; }
    int depth() const { return depth_; }
    const FieldCtx& field() const { return *desc_.constant_field; }
    long long step_count(int level) const;  // [F_level : F_0] = q^level

    const StepRelation& step1() const { return step1_; }
    // the step function of level `level` (level 1: u1 as a base function)
    FunctionRep step_function(int level) const;
    FunctionRep public_generator() const;  // y at level 1

    // decomposition
    std::vector<PlaceKey> decompose(const PlaceKey& parent) const;  // children, cached
    const PlaceData& data(const PlaceKey& P) const;
    bool is_analyzed(const PlaceKey& P) const;
    std::vector<PlaceKey> places_at(int level) const;

    // divisor-level operations
    Divisor conorm(const Divisor& D, int target_level) const;
    Divisor different(int level, int base_level = 0) const;
    long long genus(int level) const;  // exact, via Riemann-Hurwitz; integer-checked
    LociReport loci(int scan_depth) const;

    // chain data relative to a lower level, via d(P|R) = e(P|Q) d(Q|R) + d(P|Q)
    long long chain_e(const PlaceKey& P, int base_level) const;
    long long chain_d(const PlaceKey& P, int base_level) const;

    // local expansions of level-1 functions at level-1 places
    LaurentSeries expand(const FunctionRep& f, const PlaceKey& R, int len) const;
    long valuation(const FunctionRep& f, const PlaceKey& R) const;  // auto-doubling precision
    // residue of f at an unramified level-1 place (value in its residue field)
    FieldElem residue(const FunctionRep& f, const PlaceKey& R) const;
    const FieldCtx& residue_field(const PlaceKey& R) const;
    // coordinates of residue-field elements over the constant field
    std::vector<FieldElem> residue_coords(const PlaceKey& R, FieldElem a) const;

    // valuation of a base function at any analyzed place (e-scaled)
    long long base_valuation(const RatFun& f, const PlaceKey& R) const;

    Divisor pole_divisor(const FunctionRep& f) const;       // level 1, exact
    Divisor principal_divisor(const FunctionRep& f) const;  // level 1, exact
    Divisor generator_pole_divisor() const;                 // (z)_inf at level 1

    // evaluation of a level-1 function at a rational level-1 place
    FieldElem evaluate(const FunctionRep& f, const PlaceKey& R) const;

    static constexpr int kPrecisionStart = 16;
    static constexpr int kPrecisionCap = 256;

  private:
    TowerDescriptor desc_;
    int depth_;
    StepRelation step1_;
    std::unique_ptr<FunctionRep> u2_;  // step function of level 2 (depth >= 2)

    mutable std::recursive_mutex mtx_;
    mutable std::map<PlaceKey, PlaceData> data_;
    mutable std::map<PlaceKey, std::vector<PlaceKey>> children_;
    mutable std::map<PlaceKey, std::shared_ptr<Level1Expansion>> exp1_;
    mutable std::map<Place, std::shared_ptr<Level0Expansion>> exp0_;
    mutable std::map<int, long long> genus_cache_;

    std::shared_ptr<Level0Expansion> exp0(const Place& P) const;
    std::shared_ptr<Level1Expansion> exp1(const PlaceKey& R) const;
    std::vector<PlaceKey> decompose_locked(const PlaceKey& parent) const;
    void fiber_children(const PlaceKey& parent, const FieldCtx& K, FieldElem c,
                        const LaurentSeries& w_total, bool has_reduction) const;
    void ramified_child(const PlaceKey& parent, int m, const LaurentSeries& w_total,
                        bool has_reduction) const;
    void declared_child(const PlaceKey& parent) const;
    LaurentSeries step_series(const PlaceKey& parent, int len) const;  // expansion of u at parent
    std::vector<PlaceKey> pole_candidates(const FunctionRep& f) const;
};

}  // namespace isodual
