#include "gcset/fixtures.hpp"

#include "gcset/chung_yao.hpp"

#include <initializer_list>
#include <stdexcept>

namespace gcset {

namespace {

std::vector<Face> faces(std::initializer_list<std::initializer_list<int>> lists) {
    std::vector<Face> out;
    for (const auto& l : lists) out.push_back(Face::from_indices(l));
    return out;
}

LinearForm form(std::initializer_list<int> coefficients) {
    QVector v(static_cast<Eigen::Index>(coefficients.size()));
    Eigen::Index i = 0;
    for (int c : coefficients) v(i++) = Rational(c);
    return LinearForm(std::move(v));
}

// Six points of R^2 cut from four mutually general lines; the smallest
// natural lattice. Lines come from the seeded generic generator so the
// fixture is reproducible and verified-generic.
Fixture cy_4_lines() {
    auto ideal = SquarefreeMonomialIdeal::from_generators(
        4, faces({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
    return Fixture{"cy-4-lines", 1, std::move(ideal),
                   SpecializationMap(2, generic_forms(2, 4, 1)), 2};
}

// Ten integral points of the tetrahedron with vertices (0,0,0), (2,0,0),
// (0,2,0), (0,0,2), embedded in P^3 with the x_3 = 1 chart. The ten forms
// are the distinct linear factors of the configuration's cubic generators,
// indexed by the ideal's ten variables.
Fixture berzolari_radon_10() {
    auto ideal = SquarefreeMonomialIdeal::from_generators(
        10, faces({{2, 6, 7},
                   {1, 2, 6},
                   {0, 2, 6},
                   {1, 2, 5},
                   {0, 4, 9},
                   {0, 2, 4},
                   {1, 5, 8},
                   {0, 1, 5},
                   {0, 1, 4},
                   {0, 1, 2}}));
    std::vector<LinearForm> forms;
    forms.push_back(form({1, 0, 0, 0}));    // y0 -> x0
    forms.push_back(form({0, 1, 0, 0}));    // y1 -> x1
    forms.push_back(form({0, 0, 1, 0}));    // y2 -> x2
    forms.push_back(form({0, 0, 0, 1}));    // y3 -> x3
    forms.push_back(form({1, 0, 0, -1}));   // y4 -> x0 - x3
    forms.push_back(form({0, 1, 0, -1}));   // y5 -> x1 - x3
    forms.push_back(form({0, 0, 1, -1}));   // y6 -> x2 - x3
    forms.push_back(form({0, 0, 1, -2}));   // y7 -> x2 - 2x3
    forms.push_back(form({0, 1, 0, -2}));   // y8 -> x1 - 2x3
    forms.push_back(form({1, 0, 0, -2}));   // y9 -> x0 - 2x3
    return Fixture{"berzolari-radon-10", 0, std::move(ideal),
                   SpecializationMap(3, std::move(forms)), 3};
}

// A one-lattice: the tetrahedron cut by x0, x1, x2, x0+x1+x2-x3 (variables
// 4..7) plus one point on each of its six edges, carried by the four planes
// of variables 0..3. The edge points are chosen so that for every tetrahedron
// vertex the three adjacent edge points lie on a single carrier plane; that
// coincidence is exactly what lets the four vertex points be separated by
// pool products even though their components admit no monomial witness.
Fixture one_lattice_8() {
    auto ideal = SquarefreeMonomialIdeal::from_generators(
        8, faces({{0, 4, 5},
                  {1, 5, 6},
                  {2, 6, 7},
                  {3, 4, 7},
                  {0, 4, 6},
                  {1, 5, 7},
                  {4, 5, 6},
                  {4, 5, 7},
                  {4, 6, 7},
                  {5, 6, 7}}));
    std::vector<LinearForm> forms;
    forms.push_back(form({2, -1, 4, -1}));  // through the edge points of vertex {5,6,7}
    forms.push_back(form({0, 9, -1, -3}));  // through the edge points of vertex {4,6,7}
    forms.push_back(form({2, 3, 4, -1}));   // through the edge points of vertex {4,5,6}
    forms.push_back(form({4, -7, 8, -2}));  // through the edge points of vertex {4,5,7}
    forms.push_back(form({1, 0, 0, 0}));
    forms.push_back(form({0, 1, 0, 0}));
    forms.push_back(form({0, 0, 1, 0}));
    forms.push_back(form({1, 1, 1, -1}));
    return Fixture{"one-lattice-8", 1, std::move(ideal),
                   SpecializationMap(3, std::move(forms)), 3};
}

}  // namespace

Fixture fixture(const std::string& name) {
    if (name == "cy-4-lines") return cy_4_lines();
    if (name == "berzolari-radon-10") return berzolari_radon_10();
    if (name == "one-lattice-8") return one_lattice_8();
    throw std::invalid_argument("fixture: unknown name '" + name + "'");
}

std::vector<std::string> fixture_names() {
    return {"cy-4-lines", "berzolari-radon-10", "one-lattice-8"};
}

}  // namespace gcset
