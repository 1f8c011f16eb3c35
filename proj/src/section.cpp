#include "tropcomm/section.hpp"

#include <algorithm>
#include <numeric>

#include "tropcomm/errors.hpp"
#include "tropcomm/span.hpp"

namespace tropcomm {

bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
bool operator<(const Point2& a, const Point2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

namespace {

// Halfplane nx*x + ny*y <= c with nx, ny in {-1, 0, 1}.
struct Halfplane {
    int nx;
    int ny;
    Rational c;
};

Rational dot(const Halfplane& h, const Point2& p) { return h.nx * p.x + h.ny * p.y; }

// Sutherland-Hodgman clip of a convex polygon (CCW vertex list) by one
// halfplane.  Exact rational intersection points; orientation is preserved.
std::vector<Point2> clip(const std::vector<Point2>& poly, const Halfplane& h) {
    std::vector<Point2> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& cur = poly[i];
        const Point2& nxt = poly[(i + 1) % n];
        const Rational dc = dot(h, cur);
        const Rational dn = dot(h, nxt);
        const bool cur_in = dc <= h.c;
        const bool nxt_in = dn <= h.c;
        if (cur_in) out.push_back(cur);
        if (cur_in != nxt_in) {
            const Rational t = (h.c - dc) / (dn - dc);
            out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
        }
    }
    return out;
}

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Reduce a raw clipper output to a canonical cell: duplicates removed, a
// 2-cell stripped of collinear boundary points, oriented CCW and rotated to
// start at the least vertex; a 1-cell keeps sorted endpoints.  Returns a
// cell with dim -1 when the region is empty.
SectionCell canonical_cell(std::vector<Point2> pts) {
    std::vector<Point2> distinct;
    for (const Point2& p : pts) {
        if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
    }
    if (distinct.empty()) return {-1, {}};
    if (distinct.size() == 1) return {0, {distinct[0]}};

    const auto [lo, hi] = std::minmax_element(distinct.begin(), distinct.end());
    const bool flat = std::all_of(distinct.begin(), distinct.end(), [&](const Point2& p) {
        return cross(*lo, *hi, p) == 0;
    });
    if (flat) return {1, {*lo, *hi}};

    // Genuine polygon: drop repeats, enforce CCW, drop collinear vertices.
    std::vector<Point2> ring;
    for (const Point2& p : pts) {
        if (ring.empty() || !(ring.back() == p)) ring.push_back(p);
    }
    if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
    Rational area2 = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point2& a = ring[i];
        const Point2& b = ring[(i + 1) % ring.size()];
        area2 += a.x * b.y - b.x * a.y;
    }
    if (area2 < 0) std::reverse(ring.begin(), ring.end());
    std::vector<Point2> slim;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point2& prev = ring[(i + ring.size() - 1) % ring.size()];
        const Point2& cur = ring[i];
        const Point2& nxt = ring[(i + 1) % ring.size()];
        if (cross(prev, cur, nxt) != 0) slim.push_back(cur);
    }
    const auto least = std::min_element(slim.begin(), slim.end());
    std::rotate(slim.begin(), least, slim.end());
    return {2, slim};
}

// Is p inside the (convex, canonical) cell?
bool cell_contains(const SectionCell& cell, const Point2& p) {
    switch (cell.dim) {
        case 0:
            return cell.vertices[0] == p;
        case 1: {
            const Point2& a = cell.vertices[0];
            const Point2& b = cell.vertices[1];
            if (cross(a, b, p) != 0) return false;
            return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
                   std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
        }
        default: {
            const std::size_t n = cell.vertices.size();
            for (std::size_t i = 0; i < n; ++i) {
                if (cross(cell.vertices[i], cell.vertices[(i + 1) % n], p) < 0) return false;
            }
            return true;
        }
    }
}

bool cell_subset(const SectionCell& inner, const SectionCell& outer) {
    return std::all_of(inner.vertices.begin(), inner.vertices.end(),
                       [&](const Point2& p) { return cell_contains(outer, p); });
}

bool cell_equal(const SectionCell& a, const SectionCell& b) {
    return a.dim == b.dim && a.vertices == b.vertices;
}

}  // namespace

SpanSection section_complex(const TropMatrix& a) {
    if (a.rows() != 3 || a.cols() != 3) throw DimensionMismatch("section_complex expects a 3x3 matrix");
    if (!is_real(a)) throw NotReal("section_complex expects a real matrix");

    const TropMatrix a0 = normalize_a0(a);
    SpanSection out;
    for (int j = 0; j < 3; ++j) out.generators[j] = {a0.at(0, j).value(), a0.at(1, j).value()};

    // v[i][j] = i-th coordinate of generator j, with the affine row v[2][j] = 0.
    Rational v[3][3];
    for (int j = 0; j < 3; ++j) {
        v[0][j] = out.generators[j].x;
        v[1][j] = out.generators[j].y;
        v[2][j] = 0;
    }

    Rational minx = v[0][0], maxx = v[0][0], miny = v[1][0], maxy = v[1][0];
    for (int j = 1; j < 3; ++j) {
        minx = std::min(minx, v[0][j]);
        maxx = std::max(maxx, v[0][j]);
        miny = std::min(miny, v[1][j]);
        maxy = std::max(maxy, v[1][j]);
    }
    const std::vector<Point2> box = {{minx - 1, miny - 1},
                                     {maxx + 1, miny - 1},
                                     {maxx + 1, maxy + 1},
                                     {minx - 1, maxy + 1}};

    // p = (x, y, 0) lies in the span iff every row index is an argmin of
    // p_i - v_ij for some generator j.  Enumerate the covering type triples
    // (S_1, S_2, S_3), each S_j a nonempty subset of the rows, and clip the
    // bounding box by the defining inequalities p_i - p_k <= v_ij - v_kj.
    std::vector<SectionCell> cells;
    for (int m1 = 1; m1 < 8; ++m1) {
        for (int m2 = 1; m2 < 8; ++m2) {
            for (int m3 = 1; m3 < 8; ++m3) {
                if ((m1 | m2 | m3) != 7) continue;
                const int masks[3] = {m1, m2, m3};
                std::vector<Point2> poly = box;
                for (int j = 0; j < 3 && !poly.empty(); ++j) {
                    for (int i = 0; i < 3 && !poly.empty(); ++i) {
                        if (!(masks[j] & (1 << i))) continue;
                        for (int k = 0; k < 3 && !poly.empty(); ++k) {
                            if (k == i) continue;
                            const Rational c = v[i][j] - v[k][j];
                            // p_i - p_k <= c with p = (x, y, 0).
                            Halfplane h{0, 0, c};
                            if (i == 0) h.nx = 1;
                            if (i == 1) h.ny = 1;
                            if (k == 0) h.nx -= 1;
                            if (k == 1) h.ny -= 1;
                            poly = clip(poly, h);
                        }
                    }
                }
                if (poly.empty()) continue;
                SectionCell cell = canonical_cell(poly);
                if (cell.dim < 0) continue;
                if (std::none_of(cells.begin(), cells.end(),
                                 [&](const SectionCell& c) { return cell_equal(c, cell); })) {
                    cells.push_back(std::move(cell));
                }
            }
        }
    }

    // Keep only inclusion-maximal cells.
    for (std::size_t i = 0; i < cells.size(); ++i) {
        bool maximal = true;
        for (std::size_t k = 0; k < cells.size() && maximal; ++k) {
            if (k != i && !cell_equal(cells[i], cells[k]) && cell_subset(cells[i], cells[k])) {
                maximal = false;
            }
        }
        if (maximal) out.cells.push_back(cells[i]);
    }
    std::sort(out.cells.begin(), out.cells.end(), [](const SectionCell& a, const SectionCell& b) {
        if (a.dim != b.dim) return a.dim > b.dim;
        return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(),
                                            b.vertices.begin(), b.vertices.end());
    });
    return out;
}

bool section_member(const TropMatrix& a, const Point2& p) {
    return span_member(a, {p.x, p.y, Rational(0)}).member;
}

bool sector_check(const TropMatrix& a) {
    if (a.rows() != 3 || a.cols() != 3) throw DimensionMismatch("sector_check expects a 3x3 matrix");
    if (!is_real(a)) throw NotReal("sector_check expects a real matrix");
    if (!is_normal(a)) throw NotNormal("sector_check expects a normal matrix");
    const TropMatrix a0 = normalize_a0(a);
    const Rational g[3][2] = {{a0.at(0, 0).value(), a0.at(1, 0).value()},
                              {a0.at(0, 1).value(), a0.at(1, 1).value()},
                              {a0.at(0, 2).value(), a0.at(1, 2).value()}};
    const bool s1 = g[0][0] >= 0 && g[0][0] >= g[0][1];
    const bool s2 = g[1][0] <= g[1][1] && g[1][1] >= 0;
    const bool s3 = g[2][0] <= 0 && g[2][1] <= 0;
    return s1 && s2 && s3;
}

bool section_connected(const SpanSection& s) {
    const std::size_t n = s.cells.size();
    if (n <= 1) return true;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            const bool touch = std::any_of(
                s.cells[i].vertices.begin(), s.cells[i].vertices.end(), [&](const Point2& p) {
                    return std::find(s.cells[k].vertices.begin(), s.cells[k].vertices.end(), p) !=
                           s.cells[k].vertices.end();
                });
            if (touch) parent[find(i)] = find(k);
        }
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (find(i) != find(0)) return false;
    }
    return true;
}

Point2 sample_section_point(const SpanSection& s, SplitMix64& rng) {
    if (s.cells.empty()) throw DomainError("cannot sample from an empty section");
    const SectionCell& cell = s.cells[static_cast<std::size_t>(rng.below(s.cells.size()))];
    std::vector<Rational> w(cell.vertices.size());
    Rational total = 0;
    for (Rational& wi : w) {
        wi = uniform_rational(rng, 0, 1, kSampleDenominator);
        total += wi;
    }
    if (total == 0) {
        w[0] = 1;
        total = 1;
    }
    Point2 p{0, 0};
    for (std::size_t i = 0; i < w.size(); ++i) {
        p.x += w[i] * cell.vertices[i].x;
        p.y += w[i] * cell.vertices[i].y;
    }
    p.x /= total;
    p.y /= total;
    return p;
}

}  // namespace tropcomm
