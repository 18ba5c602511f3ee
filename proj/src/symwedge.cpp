#include "grit/symwedge.hpp"

#include "grit/error.hpp"

#include <omp.h>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace grit {

namespace {

void monomials(int d, int deg, Exponents& cur, int pos, std::vector<Exponents>& out) {
    if (pos == d - 1) {
        cur[static_cast<std::size_t>(pos)] = deg;
        out.push_back(cur);
        return;
    }
    for (int e = deg; e >= 0; --e) {
        cur[static_cast<std::size_t>(pos)] = e;
        monomials(d, deg - e, cur, pos + 1, out);
    }
}

}  // namespace

SymSpace::SymSpace(int d, std::vector<int> weights) : d_(d), w_(std::move(weights)) {
    if (d < 1) throw DomainError("dimension must be positive");
    if (w_.empty()) throw DomainError("weight vector is empty");
    if (w_.size() > kMaxWedge) throw DomainError("too many blocks for the tuple representation");
    offsets_.push_back(0);
    for (std::size_t b = 0; b < w_.size(); ++b) {
        if (w_[b] < 1) throw DomainError("weights must be positive");
        std::vector<Exponents> ms;
        Exponents cur(static_cast<std::size_t>(d), 0);
        monomials(d, w_[b], cur, 0, ms);
        std::map<Exponents, std::size_t> look;
        for (auto& m : ms) {
            look.emplace(m, labels_.size());
            labels_.push_back(SymLabel{static_cast<int>(b), std::move(m)});
        }
        lookup_.push_back(std::move(look));
        offsets_.push_back(labels_.size());
    }
    if (labels_.size() > 65535) throw DomainError("symmetric space too large");
}

std::optional<std::size_t> SymSpace::find(int block, const Exponents& mono) const {
    if (block < 0 || block >= blocks()) return std::nullopt;
    const auto& look = lookup_[static_cast<std::size_t>(block)];
    auto it = look.find(mono);
    if (it == look.end()) return std::nullopt;
    return it->second;
}

std::size_t SymSpace::index(int block, const Exponents& mono) const {
    auto i = find(block, mono);
    if (!i) throw DomainError("no such basis label in block " + std::to_string(block + 1));
    return *i;
}

std::string SymSpace::monomial_text(std::size_t i) const {
    const auto& m = label(i).mono;
    std::string s;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) continue;
        if (!s.empty()) s += '*';
        s += "e" + std::to_string(k + 1);
        if (m[k] > 1) s += "^" + std::to_string(m[k]);
    }
    return s;
}

std::vector<SymLabel> basis_order(int d, const std::vector<int>& weights) {
    if (weights.empty() || weights[0] != 1) throw DomainError("weights must start with 1");
    for (std::size_t i = 1; i < weights.size(); ++i)
        if (weights[i] < weights[i - 1]) throw DomainError("weights must be non-decreasing");
    return SymSpace(d, weights).labels();
}

int sort_with_sign(Tuple& t) {
    int sign = 1;
    for (std::size_t i = 1; i < t.len; ++i) {
        for (std::size_t j = i; j > 0 && t.idx[j - 1] >= t.idx[j]; --j) {
            if (t.idx[j - 1] == t.idx[j]) return 0;
            std::swap(t.idx[j - 1], t.idx[j]);
            sign = -sign;
        }
    }
    return sign;
}

namespace {

template <class C>
using Form = std::map<Exponents, C, GrlexGreater>;

// Adds c at key k of a sparse map, dropping entries that cancel.
template <class M, class K, class C>
void form_add(M& f, const K& k, const C& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = f.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) f.erase(it);
    }
}

template <class C>
Form<C> form_mul(const Form<C>& a, const Form<C>& b) {
    Form<C> out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponents e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            form_add(out, e, ca * cb);
        }
    return out;
}

// Lazily cached powers of a fixed list of linear forms in e_1..e_d.
template <class C>
class PowerCache {
public:
    PowerCache(int d, const std::vector<std::vector<C>>& linear) : d_(d) {
        for (const auto& v : linear) {
            if (static_cast<int>(v.size()) != d) throw DomainError("vector length does not match the dimension");
            Form<C> f;
            for (int i = 0; i < d; ++i) {
                Exponents e(static_cast<std::size_t>(d), 0);
                e[static_cast<std::size_t>(i)] = 1;
                form_add(f, e, v[static_cast<std::size_t>(i)]);
            }
            powers_.push_back({one(), std::move(f)});
        }
    }

    const Form<C>& power(std::size_t k, int p) {
        auto& cache = powers_.at(k);
        while (static_cast<int>(cache.size()) <= p) cache.push_back(form_mul(cache.back(), cache[1]));
        return cache[static_cast<std::size_t>(p)];
    }

    Form<C> one() const {
        Form<C> f;
        f.emplace(Exponents(static_cast<std::size_t>(d_), 0), C(Rational(1)));
        return f;
    }

private:
    int d_;
    std::vector<std::vector<Form<C>>> powers_;
};

template <class C>
SymVector<C> to_block(const SymSpace& space, int block, const Form<C>& f) {
    SymVector<C> out;
    for (const auto& [e, c] : f) out.add(space.index(block, e), c);
    return out;
}

int alpha_index(const std::string& name) {
    if (name.size() < 2 || name[0] != 'a') throw DomainError("expected a variable a<k>, got " + name);
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
            throw DomainError("expected a variable a<k>, got " + name);
    return std::stoi(name.substr(1));
}

// Appends one column to every partial wedge in `cur`.
template <class C>
void extend_range(const std::vector<const std::pair<const Tuple, C>*>& items, std::size_t lo,
                  std::size_t hi, const SymVector<C>& col, std::map<Tuple, C>& out) {
    for (std::size_t k = lo; k < hi; ++k) {
        const auto& [t, c] = *items[k];
        for (const auto& [l, x] : col.entries) {
            const auto lab = static_cast<std::uint16_t>(l);
            bool dup = false;
            int larger = 0;
            for (std::size_t s = 0; s < t.len; ++s) {
                if (t.idx[s] == lab) {
                    dup = true;
                    break;
                }
                if (t.idx[s] > lab) ++larger;
            }
            if (dup) continue;
            Tuple u;
            std::size_t s = 0;
            for (; s < t.len && t.idx[s] < lab; ++s) u.push_back(t.idx[s]);
            u.push_back(lab);
            for (; s < t.len; ++s) u.push_back(t.idx[s]);
            C v = c * x;
            if (larger % 2 == 1) v = -v;
            form_add(out, u, v);
        }
    }
}

template <class C>
std::map<Tuple, C> merge(std::vector<std::map<Tuple, C>>& parts) {
    std::map<Tuple, C> out = std::move(parts[0]);
    for (std::size_t p = 1; p < parts.size(); ++p)
        for (auto& [t, c] : parts[p]) form_add(out, t, c);
    return out;
}

template <class C>
std::map<Tuple, C> extend(const std::map<Tuple, C>& cur, const SymVector<C>& col, Exec exec) {
    std::vector<const std::pair<const Tuple, C>*> items;
    items.reserve(cur.size());
    for (const auto& kv : cur) items.push_back(&kv);
    if (exec == Exec::serial || items.size() < 8) {
        std::map<Tuple, C> out;
        extend_range(items, 0, items.size(), col, out);
        return out;
    }
    std::vector<std::map<Tuple, C>> parts(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        auto& mine = parts[static_cast<std::size_t>(omp_get_thread_num())];
        const auto n = static_cast<std::ptrdiff_t>(items.size());
#pragma omp for schedule(dynamic, 4)
        for (std::ptrdiff_t k = 0; k < n; ++k)
            extend_range(items, static_cast<std::size_t>(k), static_cast<std::size_t>(k) + 1, col, mine);
    }
    return merge(parts);
}

template <class C>
std::map<Tuple, C> wedge_terms(const std::vector<const SymVector<C>*>& cols, Exec exec) {
    std::map<Tuple, C> cur;
    cur.emplace(Tuple{}, C(Rational(1)));
    for (const auto* col : cols) {
        cur = extend(cur, *col, exec);
        if (cur.empty()) break;
    }
    return cur;
}

template <class C>
void wedge_into(const Tuple& t, const C& coeff, const std::vector<SymVector<C>>& images,
                std::map<Tuple, C>& out) {
    std::vector<const SymVector<C>*> cols;
    for (std::size_t s = 0; s < t.len; ++s) cols.push_back(&images[t.idx[s]]);
    for (auto& [u, c] : wedge_terms(cols, Exec::serial)) form_add(out, u, coeff * c);
}

template <class C>
std::vector<const std::pair<const Tuple, C>*> items_of(const MultiVector<C>& mv) {
    std::vector<const std::pair<const Tuple, C>*> items;
    items.reserve(mv.size());
    for (const auto& kv : mv.terms()) items.push_back(&kv);
    return items;
}

template <class C>
MultiVector<C> from_terms(const std::shared_ptr<const SymSpace>& s, std::map<Tuple, C> terms) {
    MultiVector<C> out(s);
    for (auto& [t, c] : terms) out.add(t, c);
    return out;
}

template <class C>
SymVector<C> derivation_image(const SymSpace& space, std::size_t i, const Matrix<C>& x) {
    const SymLabel& lab = space.label(i);
    SymVector<C> out;
    const auto d = static_cast<std::size_t>(space.dim());
    for (std::size_t k = 0; k < d; ++k) {
        if (lab.mono[k] == 0) continue;
        for (std::size_t r = 0; r < d; ++r) {
            if (is_zero(x(r, k))) continue;
            Exponents e = lab.mono;
            --e[k];
            ++e[r];
            out.add(space.index(lab.block, e), x(r, k) * Rational(lab.mono[k]));
        }
    }
    return out;
}

template <class C>
void lie_range(const std::vector<const std::pair<const Tuple, C>*>& items, std::size_t lo,
               std::size_t hi, const std::vector<SymVector<C>>& images, std::map<Tuple, C>& out) {
    for (std::size_t k = lo; k < hi; ++k) {
        const auto& [t, c] = *items[k];
        for (std::size_t s = 0; s < t.len; ++s)
            for (const auto& [l, x] : images[t.idx[s]].entries) {
                Tuple u = t;
                u.idx[s] = static_cast<std::uint16_t>(l);
                const int sign = sort_with_sign(u);
                if (sign == 0) continue;
                C v = c * x;
                if (sign < 0) v = -v;
                form_add(out, u, v);
            }
    }
}

}  // namespace

template <class C>
SymVector<C> eval_sym(const SymSpace& space, int block, const Polynomial& f,
                      const std::vector<std::vector<C>>& alpha) {
    if (block < 0 || block >= space.blocks()) throw DomainError("block index out of range");
    if (f.is_zero()) return {};
    const int target = space.weights()[static_cast<std::size_t>(block)];
    const auto deg = f.weighted_degree(std::vector<int>(f.variables().size(), 1));
    if (!deg.homogeneous || *deg.degree != target)
        throw DomainError("polynomial " + f.to_string() + " is not homogeneous of degree " +
                          std::to_string(target));
    std::vector<std::size_t> slot;
    for (const auto& v : f.variables()) {
        const int k = alpha_index(v);
        if (k < 1 || static_cast<std::size_t>(k) > alpha.size())
            throw DomainError("no vector bound to " + v);
        slot.push_back(static_cast<std::size_t>(k - 1));
    }
    PowerCache<C> cache(space.dim(), alpha);
    Form<C> acc;
    for (const auto& [e, coeff] : f.terms()) {
        Form<C> term = cache.one();
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0) term = form_mul(term, cache.power(slot[v], e[v]));
        for (const auto& [m, c] : term) form_add(acc, m, c * coeff);
    }
    return to_block(space, block, acc);
}

template <class C>
MultiVector<C> wedge(const std::shared_ptr<const SymSpace>& space, const std::vector<SymVector<C>>& cols,
                     Exec exec) {
    if (static_cast<int>(cols.size()) != space->blocks())
        throw DomainError("wedge needs exactly " + std::to_string(space->blocks()) + " columns");
    std::vector<const SymVector<C>*> ptrs;
    for (const auto& c : cols) ptrs.push_back(&c);
    return from_terms(space, wedge_terms(ptrs, exec));
}

template <class C>
SymVector<C> label_image(const SymSpace& space, std::size_t i, const Matrix<C>& g) {
    const auto d = static_cast<std::size_t>(space.dim());
    if (g.rows() != d || g.cols() != d) throw DomainError("matrix size does not match the dimension");
    std::vector<std::vector<C>> cols;
    for (std::size_t k = 0; k < d; ++k) cols.push_back(g.column(k));
    PowerCache<C> cache(space.dim(), cols);
    const SymLabel& lab = space.label(i);
    Form<C> f = cache.one();
    for (std::size_t k = 0; k < d; ++k)
        if (lab.mono[k] > 0) f = form_mul(f, cache.power(k, lab.mono[k]));
    return to_block(space, lab.block, f);
}

namespace {

template <class C>
std::vector<SymVector<C>> images_for(const SymSpace& space, const Matrix<C>& g,
                                     const std::vector<bool>& needed) {
    const auto d = static_cast<std::size_t>(space.dim());
    if (g.rows() != d || g.cols() != d) throw DomainError("matrix size does not match the dimension");
    std::vector<std::vector<C>> cols;
    for (std::size_t k = 0; k < d; ++k) cols.push_back(g.column(k));
    PowerCache<C> cache(space.dim(), cols);
    std::vector<SymVector<C>> images(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (!needed[i]) continue;
        const SymLabel& lab = space.label(i);
        Form<C> f = cache.one();
        for (std::size_t k = 0; k < d; ++k)
            if (lab.mono[k] > 0) f = form_mul(f, cache.power(k, lab.mono[k]));
        images[i] = to_block(space, lab.block, f);
    }
    return images;
}

}  // namespace

template <class C>
SymVector<C> apply_to_vector(const SymSpace& space, const Matrix<C>& g, const SymVector<C>& v) {
    std::vector<bool> needed(space.size(), false);
    for (const auto& [l, c] : v.entries) needed[l] = true;
    const auto images = images_for(space, g, needed);
    SymVector<C> out;
    for (const auto& [l, c] : v.entries)
        for (const auto& [m, x] : images[l].entries) out.add(m, c * x);
    return out;
}

template <class C>
MultiVector<C> apply_label_map(const MultiVector<C>& mv, const std::vector<SymVector<C>>& images, Exec exec) {
    if (images.size() != mv.space().size()) throw DomainError("label map has the wrong size");
    const auto items = items_of(mv);
    if (exec == Exec::serial || items.size() < 4) {
        std::map<Tuple, C> out;
        for (const auto* kv : items) wedge_into(kv->first, kv->second, images, out);
        return from_terms(mv.space_ptr(), std::move(out));
    }
    std::vector<std::map<Tuple, C>> parts(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        auto& mine = parts[static_cast<std::size_t>(omp_get_thread_num())];
        const auto n = static_cast<std::ptrdiff_t>(items.size());
#pragma omp for schedule(dynamic, 1)
        for (std::ptrdiff_t k = 0; k < n; ++k) {
            const auto* kv = items[static_cast<std::size_t>(k)];
            wedge_into(kv->first, kv->second, images, mine);
        }
    }
    return from_terms(mv.space_ptr(), merge(parts));
}

namespace {

// Replaces the labels of block b in every tuple by the wedge of their images.
// Block b occupies a contiguous label range and its images stay inside it, so
// the labels before and after the range keep their places and no sign arises.
template <class C>
void block_range(const std::vector<const std::pair<const Tuple, C>*>& items, std::size_t lo, std::size_t hi,
                 std::size_t first, std::size_t last, const std::vector<SymVector<C>>& images,
                 std::map<Tuple, std::map<Tuple, C>>& cache, std::map<Tuple, C>& out) {
    for (std::size_t k = lo; k < hi; ++k) {
        const auto& [t, c] = *items[k];
        std::size_t a = 0;
        while (a < t.len && t.idx[a] < first) ++a;
        std::size_t b = a;
        while (b < t.len && t.idx[b] < last) ++b;
        if (a == b) {
            form_add(out, t, c);
            continue;
        }
        Tuple mid;
        for (std::size_t s = a; s < b; ++s) mid.push_back(t.idx[s]);
        auto it = cache.find(mid);
        if (it == cache.end()) {
            std::vector<const SymVector<C>*> cols;
            for (std::size_t s = 0; s < mid.len; ++s) cols.push_back(&images[mid.idx[s]]);
            it = cache.emplace(mid, wedge_terms(cols, Exec::serial)).first;
        }
        for (const auto& [m, x] : it->second) {
            Tuple u;
            for (std::size_t s = 0; s < a; ++s) u.push_back(t.idx[s]);
            for (std::size_t s = 0; s < m.len; ++s) u.push_back(m.idx[s]);
            for (std::size_t s = b; s < t.len; ++s) u.push_back(t.idx[s]);
            form_add(out, u, c * x);
        }
    }
}

template <class C>
std::map<Tuple, C> apply_block(const std::map<Tuple, C>& cur, std::size_t first, std::size_t last,
                               const std::vector<SymVector<C>>& images, Exec exec) {
    std::vector<const std::pair<const Tuple, C>*> items;
    items.reserve(cur.size());
    for (const auto& kv : cur) items.push_back(&kv);
    if (exec == Exec::serial || items.size() < 8) {
        std::map<Tuple, std::map<Tuple, C>> cache;
        std::map<Tuple, C> out;
        block_range(items, 0, items.size(), first, last, images, cache, out);
        return out;
    }
    std::vector<std::map<Tuple, C>> parts(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        auto& mine = parts[static_cast<std::size_t>(omp_get_thread_num())];
        std::map<Tuple, std::map<Tuple, C>> cache;
        const auto n = static_cast<std::ptrdiff_t>(items.size());
#pragma omp for schedule(dynamic, 16)
        for (std::ptrdiff_t k = 0; k < n; ++k)
            block_range(items, static_cast<std::size_t>(k), static_cast<std::size_t>(k) + 1, first, last, images,
                        cache, mine);
    }
    return merge(parts);
}

}  // namespace

template <class C>
MultiVector<C> gl_action(const Matrix<C>& g, const MultiVector<C>& mv, Exec exec) {
    const SymSpace& space = mv.space();
    std::vector<bool> needed(space.size(), false);
    for (const auto& [t, c] : mv.terms())
        for (std::size_t s = 0; s < t.len; ++s) needed[t.idx[s]] = true;
    const auto images = images_for(space, g, needed);
    std::map<Tuple, C> cur = mv.terms();
    for (int b = 0; b < space.blocks() && !cur.empty(); ++b)
        cur = apply_block(cur, space.block_begin(b), space.block_end(b), images, exec);
    return from_terms(mv.space_ptr(), std::move(cur));
}

template <class C>
MultiVector<C> lie_action(const Matrix<C>& x, const MultiVector<C>& mv, Exec exec) {
    const SymSpace& space = mv.space();
    const auto d = static_cast<std::size_t>(space.dim());
    if (x.rows() != d || x.cols() != d) throw DomainError("matrix size does not match the dimension");
    std::vector<SymVector<C>> images(space.size());
    std::vector<bool> done(space.size(), false);
    for (const auto& [t, c] : mv.terms())
        for (std::size_t s = 0; s < t.len; ++s)
            if (!done[t.idx[s]]) {
                images[t.idx[s]] = derivation_image(space, t.idx[s], x);
                done[t.idx[s]] = true;
            }
    const auto items = items_of(mv);
    if (exec == Exec::serial || items.size() < 8) {
        std::map<Tuple, C> out;
        lie_range(items, 0, items.size(), images, out);
        return from_terms(mv.space_ptr(), std::move(out));
    }
    std::vector<std::map<Tuple, C>> parts(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        auto& mine = parts[static_cast<std::size_t>(omp_get_thread_num())];
        const auto n = static_cast<std::ptrdiff_t>(items.size());
#pragma omp for schedule(dynamic, 4)
        for (std::ptrdiff_t k = 0; k < n; ++k)
            lie_range(items, static_cast<std::size_t>(k), static_cast<std::size_t>(k) + 1, images, mine);
    }
    return from_terms(mv.space_ptr(), merge(parts));
}

Tuple pure_power_tuple(const SymSpace& space) {
    Tuple t;
    for (int b = 0; b < space.blocks(); ++b) {
        Exponents e(static_cast<std::size_t>(space.dim()), 0);
        e[0] = space.weights()[static_cast<std::size_t>(b)];
        t.push_back(static_cast<std::uint16_t>(space.index(b, e)));
    }
    return t;
}

std::optional<Tuple> det_tuple(const SymSpace& space) {
    if (space.dim() < space.blocks() || space.weights()[0] != 1) return std::nullopt;
    Tuple t;
    for (int k = 0; k < space.blocks(); ++k) {
        Exponents e(static_cast<std::size_t>(space.dim()), 0);
        e[static_cast<std::size_t>(k)] = 1;
        t.push_back(static_cast<std::uint16_t>(space.index(0, e)));
    }
    return t;
}

QMultiVector normalized(const QMultiVector& mv) {
    if (mv.is_zero()) throw DomainError("cannot normalise the zero vector");
    return mv.terms().begin()->second.inverse() * mv;
}

bool proj_equal(const QMultiVector& a, const QMultiVector& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("projective comparison with the zero vector");
    if (a.size() != b.size()) return false;
    return normalized(a) == normalized(b);
}

template <class C>
std::string to_text(const MultiVector<C>& mv) {
    if (mv.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : mv.terms()) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c << ")*(";
        for (std::size_t s = 0; s < t.len; ++s) {
            if (s) os << ", ";
            os << mv.space().label(t.idx[s]).block + 1 << ':' << mv.space().monomial_text(t.idx[s]);
        }
        os << ')';
    }
    return os.str();
}

#define GRIT_INSTANTIATE(C)                                                                          \
    template SymVector<C> eval_sym<C>(const SymSpace&, int, const Polynomial&,                       \
                                      const std::vector<std::vector<C>>&);                           \
    template MultiVector<C> wedge<C>(const std::shared_ptr<const SymSpace>&,                         \
                                     const std::vector<SymVector<C>>&, Exec);                        \
    template SymVector<C> label_image<C>(const SymSpace&, std::size_t, const Matrix<C>&);            \
    template SymVector<C> apply_to_vector<C>(const SymSpace&, const Matrix<C>&, const SymVector<C>&); \
    template MultiVector<C> apply_label_map<C>(const MultiVector<C>&,                                \
                                               const std::vector<SymVector<C>>&, Exec);              \
    template MultiVector<C> gl_action<C>(const Matrix<C>&, const MultiVector<C>&, Exec);             \
    template MultiVector<C> lie_action<C>(const Matrix<C>&, const MultiVector<C>&, Exec);            \
    template std::string to_text<C>(const MultiVector<C>&);

GRIT_INSTANTIATE(Rational)
GRIT_INSTANTIATE(Polynomial)
GRIT_INSTANTIATE(LaurentPoly)

#undef GRIT_INSTANTIATE

}  // namespace grit
