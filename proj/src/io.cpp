#include "grit/io.hpp"

#include "grit/error.hpp"

#include <fstream>
#include <sstream>

namespace grit::io {

// ParseError appends " at position N"; strip it before adding the prefix.
void rethrow_in(const std::string& where, const ParseError& e) {
    std::string msg = e.what();
    const std::string tail = " at position " + std::to_string(e.position());
    if (msg.size() >= tail.size() && msg.compare(msg.size() - tail.size(), tail.size(), tail) == 0)
        msg.resize(msg.size() - tail.size());
    throw ParseError(where + ": " + msg, e.position());
}

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw DomainError("expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end()) throw DomainError(std::string("missing field \"") + key + "\"");
    return *it;
}

int as_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw DomainError(what + " must be an integer");
    return j.get<int>();
}

std::string entry_text(const json& j, const std::string& where) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw DomainError(where + " must be a string or an integer");
}

template <class C, class Parse>
Matrix<C> matrix_from(const json& j, Parse parse) {
    if (!j.is_array() || j.empty()) throw DomainError("matrix must be a nonempty array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array()) throw DomainError("row " + std::to_string(r + 1) + " is not an array");
        if (r == 0) cols = j[r].size();
        if (j[r].size() != cols || cols == 0) throw DomainError("matrix rows have different lengths");
    }
    Matrix<C> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            const std::string where = "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
            const std::string text = entry_text(j[r][c], where);
            try {
                m(r, c) = parse(text);
            } catch (const ParseError& e) {
                rethrow_in(where, e);
            }
        }
    return m;
}

template <class C>
json matrix_json(const Matrix<C>& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<int> int_list(const json& j, const std::string& what) {
    if (!j.is_array()) throw DomainError(what + " must be an array");
    std::vector<int> out;
    for (const auto& v : j) out.push_back(as_int(v, what + " entry"));
    return out;
}

}  // namespace

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann counts bytes read; report the 0-based offending offset
        throw ParseError(std::string("invalid JSON (") + e.what() + ")", e.byte > 0 ? e.byte - 1 : 0);
    }
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_json(ss.str());
    } catch (const ParseError& e) {
        rethrow_in(path, e);
    }
}

GroupPresentation presentation_from_json(const json& j) {
    GroupPresentation p;
    p.n = as_int(field(j, "n"), "n");
    p.weights = int_list(field(j, "weights"), "weights");
    if (static_cast<int>(p.weights.size()) != p.n) throw DomainError("weights must have n entries");
    if (j.contains("p")) {
        const json& entries = j["p"];
        if (!entries.is_object()) throw DomainError("p must be an object keyed by \"i,j\"");
        for (const auto& [key, val] : entries.items()) {
            int i = 0, k = 0;
            char comma = 0;
            std::istringstream ks(key);
            if (!(ks >> i >> comma >> k) || comma != ',' || !ks.eof())
                throw DomainError("p key \"" + key + "\" is not of the form i,j");
            const std::string where = "p[\"" + key + "\"]";
            const std::string text = entry_text(val, where);
            try {
                p.p[{i, k}] = Polynomial::parse(text);
            } catch (const ParseError& e) {
                rethrow_in(where, e);
            }
        }
    }
    if (j.contains("metadata")) {
        const json& md = j["metadata"];
        if (!md.is_object()) throw DomainError("metadata must be an object of strings");
        for (const auto& [k, v] : md.items()) {
            if (!v.is_string()) throw DomainError("metadata value for " + k + " must be a string");
            p.metadata.emplace_back(k, v.get<std::string>());
        }
    }
    check_shape(p);
    return p;
}

json presentation_to_json(const GroupPresentation& p) {
    json out;
    out["n"] = p.n;
    out["weights"] = p.weights;
    json entries = json::object();
    for (const auto& [ij, f] : p.p)
        entries[std::to_string(ij.first) + "," + std::to_string(ij.second)] = f.to_string();
    out["p"] = std::move(entries);
    if (!p.metadata.empty()) {
        json md = json::object();
        for (const auto& [k, v] : p.metadata) md[k] = v;
        out["metadata"] = std::move(md);
    }
    return out;
}

QMatrix rational_matrix_from_json(const json& j) {
    return matrix_from<Rational>(j, [](const std::string& s) { return Rational::parse(s); });
}

Matrix<LaurentPoly> curve_from_json(const json& j) {
    return matrix_from<LaurentPoly>(j, [](const std::string& s) { return LaurentPoly::parse(s); });
}

json matrix_to_json(const QMatrix& m) { return matrix_json(m); }
json matrix_to_json(const Matrix<LaurentPoly>& m) { return matrix_json(m); }
json matrix_to_json(const Matrix<Polynomial>& m) { return matrix_json(m); }

QMultiVector point_from_json(const json& j) {
    const int d = as_int(field(j, "dim"), "dim");
    const auto weights = int_list(field(j, "weights"), "weights");
    if (d < 1 || weights.empty()) throw DomainError("point needs dim >= 1 and at least one weight");
    const auto space = SymSpace::make(d, weights);
    QMultiVector mv(space);
    const json& terms = field(j, "terms");
    if (!terms.is_array()) throw DomainError("terms must be an array");
    std::size_t idx = 0;
    for (const auto& t : terms) {
        ++idx;
        const std::string where = "term " + std::to_string(idx);
        Rational c;
        try {
            c = Rational::parse(entry_text(field(t, "coeff"), where + " coeff"));
        } catch (const ParseError& e) {
            rethrow_in(where, e);
        }
        const json& labels = field(t, "labels");
        if (!labels.is_array() || labels.size() != weights.size())
            throw DomainError(where + " must list one label per block");
        Tuple tup;
        for (const auto& l : labels) {
            if (!l.is_array() || l.size() != 2) throw DomainError(where + ": label must be [block, [exponents]]");
            const int b = as_int(l[0], where + " block");
            if (b < 1 || b > static_cast<int>(weights.size())) throw DomainError(where + ": block out of range");
            const auto mono = int_list(l[1], where + " exponents");
            const auto found = space->find(b - 1, Exponents(mono.begin(), mono.end()));
            if (!found) throw DomainError(where + ": exponents do not match the block weight");
            tup.push_back(static_cast<std::uint16_t>(*found));
        }
        const int sign = sort_with_sign(tup);
        if (sign == 0) continue;
        mv.add(tup, sign < 0 ? -c : c);
    }
    return mv;
}

json point_to_json(const QMultiVector& mv) {
    const SymSpace& s = mv.space();
    json out;
    out["dim"] = s.dim();
    out["weights"] = s.weights();
    json terms = json::array();
    for (const auto& [t, c] : mv.terms()) {
        json labels = json::array();
        for (std::size_t k = 0; k < t.size(); ++k) {
            const SymLabel& l = s.label(t[k]);
            labels.push_back(json::array({l.block + 1, std::vector<int>(l.mono.begin(), l.mono.end())}));
        }
        terms.push_back({{"coeff", c.to_string()}, {"labels", std::move(labels)}});
    }
    out["terms"] = std::move(terms);
    out["text"] = to_text(mv);
    return out;
}

}  // namespace grit::io
