#include "grit/scenarios.hpp"

#include <utility>

namespace grit {

std::optional<GroupPresentation> builtin_group(const std::string& name) {
    if (name == "heisenberg-adjoint") return make_adjoint_form(heisenberg_lie_data());
    if (name.size() == 3 && name.compare(0, 2, "gn") == 0 && name[2] >= '1' && name[2] <= '8')
        return make_jet_group(name[2] - '0');
    return std::nullopt;
}

std::vector<std::string> builtin_group_names() {
    std::vector<std::string> out;
    for (int n = 1; n <= 8; ++n) out.push_back("gn" + std::to_string(n));
    out.emplace_back("heisenberg-adjoint");
    return out;
}

namespace {

SymVector<Rational> vec(const SymSpace& s, const std::vector<std::pair<std::pair<int, Exponents>, Rational>>& terms) {
    SymVector<Rational> v;
    for (const auto& [lab, c] : terms) v.add(s.index(lab.first, lab.second), c);
    return v;
}

Matrix<LaurentPoly> laurent(const std::vector<std::vector<const char*>>& rows) {
    Matrix<LaurentPoly> m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = LaurentPoly::parse(rows[i][j]);
    return m;
}

}  // namespace

QMultiVector i22_point(const Rational& c) {
    const auto s = make_jet_group(4).space();
    const Rational one(1);
    return wedge<Rational>(s, {vec(*s, {{{0, {1, 0, 0, 0}}, one}}),
                               vec(*s, {{{0, {0, 1, 0, 0}}, one}}),
                               vec(*s, {{{0, {0, 0, 1, 0}}, one}, {{1, {2, 0, 0, 0}}, one}}),
                               vec(*s, {{{0, {0, 0, 0, 1}}, one},
                                        {{1, {1, 0, 1, 0}}, c},
                                        {{1, {0, 2, 0, 0}}, one},
                                        {{2, {3, 0, 0, 0}}, one}})},
                           Exec::serial);
}

Matrix<LaurentPoly> i22_torus_curve() {
    return laurent({{"t^2", "1/3*t^2", "-1/18*t^2", "0"},
                    {"0", "t^3", "-1/3*t^3", "0"},
                    {"0", "0", "t^4", "0"},
                    {"0", "0", "0", "t^6"}});
}

Matrix<LaurentPoly> i22_shear_curve() {
    return laurent({{"t", "t^-2", "-t^-5", "0"}, {"0", "1", "-2*t^-3", "0"}, {"0", "0", "t^-1", "0"}, {"0", "0", "0", "1"}});
}

}  // namespace grit
