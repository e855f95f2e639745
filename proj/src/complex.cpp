#include "gcset/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace gcset {

namespace {

// Enumeration over all subsets of the vertex set; keeps the combinatorial
// searches honest but bounds the vertex count.
constexpr int kEnumerationLimit = 24;

void require_enumerable(const SimplicialComplex& complex, const char* op) {
    if (complex.vertex_count() > kEnumerationLimit) {
        throw std::invalid_argument(std::string(op) + ": vertex count " +
                                    std::to_string(complex.vertex_count()) +
                                    " exceeds the enumeration limit " +
                                    std::to_string(kEnumerationLimit));
    }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int vertex_count, std::vector<Face> faces) {
    if (vertex_count <= 0)
        throw std::invalid_argument("from_facets: vertex_count must be positive");
    if (vertex_count > kMaxVertices)
        throw std::invalid_argument("from_facets: vertex_count exceeds " +
                                    std::to_string(kMaxVertices));
    for (const Face& f : faces) {
        if (f.max_vertex() >= vertex_count)
            throw std::invalid_argument("from_facets: vertex index out of range");
    }
    // Keep inclusion-maximal faces only.
    std::sort(faces.begin(), faces.end(),
              [](const Face& a, const Face& b) { return a.size() > b.size(); });
    std::vector<Face> maximal;
    for (const Face& f : faces) {
        bool dominated = false;
        for (const Face& kept : maximal) {
            if (kept.contains(f)) { dominated = true; break; }
        }
        if (!dominated) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end(), size_lex_less);
    return SimplicialComplex(vertex_count, std::move(maximal));
}

int SimplicialComplex::dimension() const {
    if (is_void()) return -2;
    int dim = -1;
    for (const Face& f : facets_) dim = std::max(dim, f.dimension());
    return dim;
}

bool SimplicialComplex::contains(const Face& f) const {
    for (const Face& facet : facets_) {
        if (facet.contains(f)) return true;
    }
    return false;
}

std::vector<Face> SimplicialComplex::all_faces() const {
    std::unordered_set<Face, FaceHash> seen;
    for (const Face& facet : facets_) {
        // Standard submask walk, including the empty subset.
        std::uint64_t sub = facet.mask();
        while (true) {
            seen.insert(Face::from_mask(sub));
            if (sub == 0) break;
            sub = (sub - 1) & facet.mask();
        }
    }
    std::vector<Face> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

FVector f_vector(const SimplicialComplex& complex) {
    if (complex.is_void())
        throw std::invalid_argument("f_vector: the void complex has no f-vector");
    FVector fv;
    fv.counts.assign(static_cast<std::size_t>(complex.dimension()) + 2, 0);
    for (const Face& f : complex.all_faces())
        ++fv.counts[static_cast<std::size_t>(f.size())];
    return fv;
}

SimplicialComplex skeleton(int i, int j) {
    if (j < 1 || j > i)
        throw std::invalid_argument("skeleton: need 1 <= j <= i");
    if (i > kMaxVertices)
        throw std::invalid_argument("skeleton: too many vertices");
    if (binomial(i, j) > 2'000'000)
        throw std::invalid_argument("skeleton: facet count too large to materialize");
    return SimplicialComplex::from_facets(i, subsets_of_size(i, j));
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex) {
    require_enumerable(complex, "minimal_nonfaces");
    const int m = complex.vertex_count();
    std::vector<Face> found;
    for (int k = 0; k <= m; ++k) {
        for_each_subset(m, k, [&](const Face& s) {
            for (const Face& nf : found) {
                if (s.contains(nf)) return;
            }
            if (!complex.contains(s)) found.push_back(s);
        });
    }
    // Enumeration by increasing size is already lex within each size; the
    // overall list is sorted by lex order.
    std::sort(found.begin(), found.end(), lex_less);
    return found;
}

SimplicialComplex alexander_dual(const SimplicialComplex& complex) {
    const int m = complex.vertex_count();
    std::vector<Face> facets;
    for (const Face& nf : minimal_nonfaces(complex)) facets.push_back(nf.complement(m));
    return SimplicialComplex::from_facets(m, std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& complex, const Face& sigma) {
    if (!complex.contains(sigma))
        throw std::invalid_argument("link: sigma is not a face of the complex");
    std::vector<Face> facets;
    for (const Face& facet : complex.facets()) {
        if (facet.contains(sigma)) facets.push_back(facet.minus(sigma));
    }
    return SimplicialComplex::from_facets(complex.vertex_count(), std::move(facets));
}

bool is_pure(const SimplicialComplex& complex) {
    const auto& facets = complex.facets();
    for (const Face& f : facets) {
        if (f.size() != facets.front().size()) return false;
    }
    return true;
}

}  // namespace gcset
