#pragma once

#include "grit/laurent.hpp"
#include "grit/matrix.hpp"
#include "grit/parallel.hpp"
#include "grit/polynomial.hpp"
#include "grit/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace grit {

/// Largest exterior power supported by the tuple representation.
inline constexpr std::size_t kMaxWedge = 8;

/// Basis vector of Sym^{w_b} C^d: block index b (0-based) and the exponent
/// vector of the monomial in e_1..e_d.
struct SymLabel {
    int block = 0;
    Exponents mono;
};

/// The direct sum of Sym^{w_b} C^d over the blocks b, with a fixed basis
/// order: by block, then lexicographically descending exponent vectors
/// (e1^2, e1*e2, e2^2). Blocks with equal weight stay separate.
class SymSpace {
public:
    SymSpace(int d, std::vector<int> weights);
    static std::shared_ptr<const SymSpace> make(int d, std::vector<int> weights) {
        return std::make_shared<const SymSpace>(d, std::move(weights));
    }

    int dim() const { return d_; }
    int blocks() const { return static_cast<int>(w_.size()); }
    const std::vector<int>& weights() const { return w_; }

    std::size_t size() const { return labels_.size(); }
    const SymLabel& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<SymLabel>& labels() const { return labels_; }
    std::size_t block_begin(int b) const { return offsets_.at(static_cast<std::size_t>(b)); }
    std::size_t block_end(int b) const { return offsets_.at(static_cast<std::size_t>(b) + 1); }

    std::optional<std::size_t> find(int block, const Exponents& mono) const;
    /// Throws DomainError for an unknown label.
    std::size_t index(int block, const Exponents& mono) const;
    /// e1^2*e3 style text for the monomial of label i.
    std::string monomial_text(std::size_t i) const;

    friend bool operator==(const SymSpace& a, const SymSpace& b) { return a.d_ == b.d_ && a.w_ == b.w_; }

private:
    int d_;
    std::vector<int> w_;
    std::vector<SymLabel> labels_;
    std::vector<std::size_t> offsets_;
    std::vector<std::map<Exponents, std::size_t>> lookup_;
};

/// All labels for weights w over C^d in basis order. Requires w_1 = 1 and w
/// non-decreasing.
std::vector<SymLabel> basis_order(int d, const std::vector<int>& weights);

/// Strictly increasing label indices.
struct Tuple {
    std::array<std::uint16_t, kMaxWedge> idx{};
    std::uint8_t len = 0;

    std::size_t size() const { return len; }
    std::uint16_t operator[](std::size_t i) const { return idx[i]; }
    void push_back(std::uint16_t v) { idx[len++] = v; }
    friend auto operator<=>(const Tuple&, const Tuple&) = default;
};

/// Sorts in place; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(Tuple& t);

template <class C>
struct SymVector {
    std::map<std::size_t, C> entries;

    bool is_zero() const { return entries.empty(); }
    void add(std::size_t label, const C& c) {
        if (is_zero_coeff(c)) return;
        auto [it, inserted] = entries.try_emplace(label, c);
        if (!inserted) {
            it->second += c;
            if (is_zero_coeff(it->second)) entries.erase(it);
        }
    }

private:
    static bool is_zero_coeff(const C& c) { return grit::is_zero(c); }
};

/// Sparse element of the n-th exterior power of a SymSpace with n = blocks().
template <class C>
class MultiVector {
public:
    using TermMap = std::map<Tuple, C>;

    MultiVector() = default;
    explicit MultiVector(std::shared_ptr<const SymSpace> s) : space_(std::move(s)) {}

    const SymSpace& space() const { return *space_; }
    const std::shared_ptr<const SymSpace>& space_ptr() const { return space_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// `t` must already be sorted.
    void add(const Tuple& t, const C& c) {
        if (grit::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(t, c);
        if (!inserted) {
            it->second += c;
            if (grit::is_zero(it->second)) terms_.erase(it);
        }
    }
    C coefficient(const Tuple& t) const {
        auto it = terms_.find(t);
        return it == terms_.end() ? C(Rational(0)) : it->second;
    }

    MultiVector& operator+=(const MultiVector& o) {
        for (const auto& [t, c] : o.terms_) add(t, c);
        return *this;
    }
    MultiVector& operator-=(const MultiVector& o) {
        for (const auto& [t, c] : o.terms_) add(t, -c);
        return *this;
    }
    friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
    friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
    friend MultiVector operator*(const Rational& s, const MultiVector& a) {
        MultiVector out(a.space_);
        if (s.is_zero()) return out;
        for (const auto& [t, c] : a.terms_) out.terms_.emplace(t, c * s);
        return out;
    }
    friend bool operator==(const MultiVector& a, const MultiVector& b) {
        return a.terms_ == b.terms_;
    }

    /// Applies f to every coefficient, dropping results that vanish.
    template <class D, class F>
    MultiVector<D> map(F f) const {
        MultiVector<D> out(space_);
        for (const auto& [t, c] : terms_) out.add(t, f(c));
        return out;
    }

private:
    std::shared_ptr<const SymSpace> space_;
    TermMap terms_;
};

using QMultiVector = MultiVector<Rational>;

/// Evaluates f in the symmetric algebra with the variable a_k replaced by the
/// linear form alpha[k-1] (coordinates in e_1..e_d), landing in `block`.
/// f must be homogeneous of ordinary degree weights[block]; zero is allowed.
template <class C>
SymVector<C> eval_sym(const SymSpace& space, int block, const Polynomial& f,
                      const std::vector<std::vector<C>>& alpha);

/// Expanded wedge of exactly blocks() columns.
template <class C>
MultiVector<C> wedge(const std::shared_ptr<const SymSpace>& space,
                     const std::vector<SymVector<C>>& cols, Exec exec = default_exec());

/// Image of basis label i under e_k -> g e_k, extended multiplicatively.
template <class C>
SymVector<C> label_image(const SymSpace& space, std::size_t i, const Matrix<C>& g);

/// Applies g to a vector of the SymSpace.
template <class C>
SymVector<C> apply_to_vector(const SymSpace& space, const Matrix<C>& g, const SymVector<C>& v);

/// Extends a linear map given on basis labels to the exterior power.
template <class C>
MultiVector<C> apply_label_map(const MultiVector<C>& mv, const std::vector<SymVector<C>>& images,
                               Exec exec = default_exec());

template <class C>
MultiVector<C> gl_action(const Matrix<C>& g, const MultiVector<C>& mv, Exec exec = default_exec());

/// Derivative of gl_action at the identity in the direction X.
template <class C>
MultiVector<C> lie_action(const Matrix<C>& x, const MultiVector<C>& mv, Exec exec = default_exec());

/// The tuple (e1, e1^{w2}, ..., e1^{wn}).
Tuple pure_power_tuple(const SymSpace& space);
/// The tuple (e1, ..., en) of block-1 labels; absent when d < n.
std::optional<Tuple> det_tuple(const SymSpace& space);

template <class C>
struct BoundaryProjection {
    C pi_wedge;
    C pi_det;
};

template <class C>
BoundaryProjection<C> project_boundary(const MultiVector<C>& mv) {
    const SymSpace& s = mv.space();
    const auto dt = det_tuple(s);
    return {mv.coefficient(pure_power_tuple(s)), dt ? mv.coefficient(*dt) : C(Rational(0))};
}

/// True iff a = c*b for a nonzero rational c. Throws on zero input.
bool proj_equal(const QMultiVector& a, const QMultiVector& b);
/// Scales so the first coefficient in tuple order is 1. Throws on zero.
QMultiVector normalized(const QMultiVector& mv);

/// Human-readable form, one bracket per term with block:monomial slots,
/// e.g. "(1)*(1:e1, 1:e2) + (2)*(1:e1, 2:e1^2)".
template <class C>
std::string to_text(const MultiVector<C>& mv);

}  // namespace grit
