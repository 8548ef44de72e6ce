#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kreg/matrix.hpp"
#include "kreg/polynomial.hpp"
#include "kreg/rng.hpp"

namespace kreg {

/// Hilbert function of a finite local algebra: values[i] = dim m^i / m^{i+1},
/// trailing zeros trimmed. For a well-formed function values[0] = 1, zeros
/// are terminal, and the values sum to the length of the scheme; arbitrary
/// sequences are representable so violations can be detected.
struct HilbertFn {
    std::vector<std::uint64_t> values;

    std::uint64_t sum() const {
        std::uint64_t s = 0;
        for (auto v : values) s += v;
        return s;
    }

    void trim() {
        while (!values.empty() && values.back() == 0) values.pop_back();
    }

    friend bool operator==(const HilbertFn& a, const HilbertFn& b) { return a.values == b.values; }
};

enum class AlgebraKind { curvilinear, special, monomial_quotient };

/// Finite local quotient algebra with a distinguished monomial normal-form
/// basis, basis[0] = 1. Three families:
///   curvilinear(k)       C[x]/(x^k),                 basis 1, x, ..., x^{k-1}
///   special(k)           C[x,y]/(xy, x^{k-2} - y^2), basis 1, x, ..., x^{k-2}, y
///   monomial_quotient    C[x_1..x_n]/(monomial ideal), standard monomials
/// Products of basis monomials reduce to a single basis monomial or to zero,
/// which keeps multiplication a table lookup.
class FiniteLocalAlgebra {
public:
    static FiniteLocalAlgebra curvilinear(std::uint32_t k);
    static FiniteLocalAlgebra special(std::uint32_t k);  // requires k >= 4
    static FiniteLocalAlgebra monomial_quotient(std::size_t nvars, std::vector<Monomial> generators);

    AlgebraKind kind() const { return kind_; }
    std::uint32_t k() const { return k_; }
    std::size_t nvars() const { return nvars_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Monomial>& basis() const { return basis_; }

    /// Index of the basis monomial the product basis[i]*basis[j] reduces to,
    /// or nullopt when the product is zero in the algebra.
    std::optional<std::size_t> mul_basis(std::size_t i, std::size_t j) const;

    std::string str() const;

private:
    FiniteLocalAlgebra() = default;

    std::optional<std::size_t> reduce(const Monomial& product) const;

    AlgebraKind kind_ = AlgebraKind::curvilinear;
    std::uint32_t k_ = 0;  // parameter for curvilinear/special
    std::size_t nvars_ = 0;
    std::vector<Monomial> basis_;
    std::map<Monomial, std::size_t, GrlexLeadFirst> basis_index_;
    std::vector<Monomial> generators_;  // monomial_quotient only
};

/// Element written over the algebra's normal-form basis.
struct AlgebraElement {
    std::vector<Rat> coords;

    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.coords == b.coords;
    }
};

AlgebraElement algebra_zero(const FiniteLocalAlgebra& a);
AlgebraElement algebra_one(const FiniteLocalAlgebra& a);
AlgebraElement algebra_basis_element(const FiniteLocalAlgebra& a, std::size_t i);

AlgebraElement algebra_add(const FiniteLocalAlgebra& a, const AlgebraElement& x,
                           const AlgebraElement& y);
AlgebraElement algebra_scale(const FiniteLocalAlgebra& a, const Rat& c, const AlgebraElement& x);

/// Product reduced to normal form.
AlgebraElement algebra_mul(const FiniteLocalAlgebra& a, const AlgebraElement& x,
                           const AlgebraElement& y);

/// Embedding of the scheme in affine space: images of the n ambient
/// variables, each lying in the maximal ideal (zero coefficient on 1) so the
/// scheme stays supported at the origin.
struct Embedding {
    Embedding(FiniteLocalAlgebra algebra, std::vector<AlgebraElement> images);

    FiniteLocalAlgebra algebra;
    std::vector<AlgebraElement> images;  // one per ambient variable
};

/// p evaluated at the embedding's variable images, exactly.
AlgebraElement push_polynomial(const Embedding& e, const Polynomial& p);

/// Hilbert function from the filtration by powers of the maximal ideal.
HilbertFn hilbert_function(const FiniteLocalAlgebra& a);

/// Indices (1..6) of the violated properties of a Hilbert function:
/// (1) zeros are terminal, (2) H(0) = 1, (3) finite support, (4) sum equals
/// the length, (5) last nonzero value 1, checked only when `gorenstein` is
/// asserted, (6) H(1) = 1 forces all later values <= 1.
std::vector<int> check_hilbert_properties(const HilbertFn& h, std::uint64_t length,
                                          bool gorenstein);

/// Contraction of a differential-operator monomial on a polynomial in dual
/// variables: x^a acts as the partial derivative d^a/dy^a (falling-factorial
/// coefficients).
Polynomial contract(const Monomial& op, const Polynomial& f);

/// Minimal generators of the apolar ideal Ann(f), computed degree by degree
/// up to deg(f)+1 as kernels of the contraction pairing; generators already
/// in the previously generated ideal are discarded. f must be nonzero.
std::vector<Polynomial> apolar_annihilator(const Polynomial& f);

/// Hilbert function of the apolar algebra of a homogeneous f of degree d:
/// H(i) = rank of the degree-i catalecticant (contraction from degree-i
/// operators into degree d-i polynomials), i = 0..d.
HilbertFn apolar_hilbert(const Polynomial& f);

/// Basis of the linear functionals on C^N vanishing on the span of the
/// scheme's image: kernel of the dim(A) x N matrix whose column j is the
/// image of component f_j in the algebra.
std::vector<std::vector<Rat>> scheme_span_kernel(const PolyMap& map, const Embedding& e);

/// True iff every functional of scheme_span_kernel vanishes at P.
bool point_in_span(const std::vector<Rat>& point, const PolyMap& map, const Embedding& e);

/// Family of embeddings sampled in avoidance experiments.
struct SchemeFamily {
    AlgebraKind kind = AlgebraKind::curvilinear;
    std::uint32_t k = 0;

    FiniteLocalAlgebra make() const;
    std::string str() const;
    static SchemeFamily parse(const std::string& s);  // "curvilinear:4", "special:5"
};

/// Random embedding of the family into n variables: normal-form coefficients
/// from the bounded-height sampler; resampled while every image has zero
/// linear part (the hard cases of the proofs have a nonzero one; the all-zero
/// branch is exercised by a deterministic test instead).
Embedding sample_embedding(const FiniteLocalAlgebra& a, std::size_t nvars, SplitMix64& rng,
                           const SamplerConfig& cfg);

struct AvoidanceReport {
    std::uint64_t trials = 0;
    std::uint64_t violations = 0;
    std::int64_t seed = 0;
    std::string config_digest;
    std::vector<Embedding> witnesses;  // first few violating embeddings
};

/// Samples `trials` random embeddings of the family and counts those whose
/// scheme span contains the candidate projection center P. Deterministic in
/// (seed, config); zero violations is the expected outcome for the centers
/// of the published constructions.
AvoidanceReport avoidance_experiment(const PolyMap& map, const std::vector<Rat>& center,
                                     const SchemeFamily& family, std::uint64_t trials,
                                     std::int64_t seed, const SamplerConfig& cfg = {});

}  // namespace kreg
