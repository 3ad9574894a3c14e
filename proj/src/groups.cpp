#include "spchain/groups.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "spchain/errors.hpp"

namespace spchain::groups {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<int> closure_of(const FiniteGroup& g, std::vector<int> seed) {
    std::set<int> seen(seed.begin(), seed.end());
    seen.insert(g.identity);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(seen.begin(), seen.end());
        for (int a : cur)
            for (int b : cur) {
                if (seen.insert(g.mult(a, b)).second) grew = true;
            }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

int FiniteGroup::inverse(int a) const {
    for (int b = 0; b < order; ++b)
        if (mult(a, b) == identity) return b;
    throw InvalidGroup("element without inverse");
}

int FiniteGroup::element_order(int a) const {
    int x = a, n = 1;
    while (x != identity) {
        x = mult(x, a);
        ++n;
        if (n > order) throw InvalidGroup("element order exceeds group order");
    }
    return n;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (mult(a, b) != mult(b, a)) return false;
    return true;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> labels, std::vector<int> table) {
    FiniteGroup g;
    g.order = static_cast<int>(labels.size());
    if (table.size() != static_cast<size_t>(g.order) * g.order)
        throw InvalidGroup("table size does not match order^2");
    g.table = std::move(table);
    g.labels = std::move(labels);

    const int n = g.order;
    for (int v : g.table)
        if (v < 0 || v >= n) throw InvalidGroup("table entry out of range");

    // Latin square: each row and column is a permutation.
    for (int a = 0; a < n; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (int b = 0; b < n; ++b) {
            if (row[g.mult(a, b)]) throw InvalidGroup("row is not a permutation");
            row[g.mult(a, b)] = true;
            if (col[g.mult(b, a)]) throw InvalidGroup("column is not a permutation");
            col[g.mult(b, a)] = true;
        }
    }

    // Identity.
    int id = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = g.mult(e, a) == a && g.mult(a, e) == a;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id < 0) throw InvalidGroup("no identity element");
    g.identity = id;

    // Associativity, exhaustive.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mult(g.mult(a, b), c) != g.mult(a, g.mult(b, c)))
                    throw InvalidGroup("associativity fails");

    // Inverses.
    for (int a = 0; a < n; ++a) (void)g.inverse(a);
    return g;
}

bool Subgroup::contains(int a) const {
    return std::binary_search(members.begin(), members.end(), a);
}

bool Character::is_trivial(double tol) const {
    for (const cx& v : values)
        if (std::abs(v - cx(1, 0)) > tol) return false;
    return true;
}

namespace {

FiniteGroup cyclic(int n, const std::string& gen_label) {
    std::vector<std::string> labels(n);
    labels[0] = "e";
    for (int k = 1; k < n; ++k)
        labels[k] = k == 1 ? gen_label : gen_label + std::to_string(k);
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    return FiniteGroup::from_table(std::move(labels), std::move(table));
}

FiniteGroup klein_four() {
    // Elements e, x, y, z; product of two distinct non-identity elements is the third.
    std::vector<std::string> labels{"e", "x", "y", "z"};
    auto idx = [](int a, int b) {
        if (a == 0) return b;
        if (b == 0) return a;
        if (a == b) return 0;
        return 6 - a - b;
    };
    std::vector<int> table(16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) table[static_cast<size_t>(a) * 4 + b] = idx(a, b);
    return FiniteGroup::from_table(std::move(labels), std::move(table));
}

}  // namespace

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const int n = g.order * h.order;
    std::vector<std::string> labels(n);
    std::vector<int> table(static_cast<size_t>(n) * n);
    auto pack = [&](int a, int b) { return a * h.order + b; };
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < h.order; ++b)
            labels[pack(a, b)] = "(" + g.labels[a] + "," + h.labels[b] + ")";
    for (int a1 = 0; a1 < g.order; ++a1)
        for (int b1 = 0; b1 < h.order; ++b1)
            for (int a2 = 0; a2 < g.order; ++a2)
                for (int b2 = 0; b2 < h.order; ++b2)
                    table[static_cast<size_t>(pack(a1, b1)) * n + pack(a2, b2)] =
                        pack(g.mult(a1, a2), h.mult(b1, b2));
    return FiniteGroup::from_table(std::move(labels), std::move(table));
}

G2Build build_g2() {
    // D2 semidirect Z4.  Elements are pairs (n, h), n in {e,u,v,w}, h in Z4,
    // multiplied as (n1,h1)(n2,h2) = (n1 * phi^h1(n2), h1+h2), where the Z4
    // generator acts on D2 by swapping u and v (w is fixed).  This action is
    // the one realized by the rotation pairs alpha = (sqrt(Rz), Rx) and
    // beta = (Ru, Ru): conjugation by alpha exchanges the u and v rotations.
    const std::array<std::string, 4> dn{"e", "u", "v", "w"};
    auto d2_mult = [](int a, int b) {
        if (a == 0) return b;
        if (b == 0) return a;
        if (a == b) return 0;
        return 6 - a - b;
    };
    auto phi = [](int n, int h) {
        if (h % 2 == 0) return n;
        if (n == 1) return 2;
        if (n == 2) return 1;
        return n;
    };
    const int order = 16;
    auto pack = [](int n, int h) { return n * 4 + h; };
    std::vector<std::string> labels(order);
    for (int n = 0; n < 4; ++n)
        for (int h = 0; h < 4; ++h) labels[pack(n, h)] = "(" + dn[n] + "," + std::to_string(h) + ")";
    std::vector<int> table(order * order);
    for (int n1 = 0; n1 < 4; ++n1)
        for (int h1 = 0; h1 < 4; ++h1)
            for (int n2 = 0; n2 < 4; ++n2)
                for (int h2 = 0; h2 < 4; ++h2)
                    table[static_cast<size_t>(pack(n1, h1)) * order + pack(n2, h2)] =
                        pack(d2_mult(n1, phi(n2, h1)), (h1 + h2) % 4);
    G2Build out;
    out.group = FiniteGroup::from_table(std::move(labels), std::move(table));
    out.alpha = pack(0, 1);
    out.beta = pack(1, 0);
    return out;
}

FiniteGroup build_named_group(const std::string& name) {
    if (name == "Z2") return cyclic(2, "a");
    if (name == "Z4") return cyclic(4, "a");
    if (name == "Z2xZ2") return klein_four();
    if (name == "Z2xZ2_x_Z2xZ2") return direct_product(klein_four(), klein_four());
    if (name == "D2_semidirect_Z4") return build_g2().group;
    throw UnknownGroupName(name);
}

Subgroup center(const FiniteGroup& g) {
    Subgroup s;
    s.parent = g;
    for (int a = 0; a < g.order; ++a) {
        bool central = true;
        for (int b = 0; b < g.order && central; ++b) central = g.mult(a, b) == g.mult(b, a);
        if (central) s.members.push_back(a);
    }
    return s;
}

Subgroup derived_subgroup(const FiniteGroup& g) {
    std::vector<int> comms;
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            comms.push_back(g.mult(g.mult(a, b), g.mult(g.inverse(a), g.inverse(b))));
    Subgroup s;
    s.parent = g;
    s.members = closure_of(g, std::move(comms));
    return s;
}

Abelianization abelianization(const FiniteGroup& g) {
    Subgroup d = derived_subgroup(g);
    std::vector<int> to_coset(g.order, -1);
    std::vector<int> reps;
    for (int a = 0; a < g.order; ++a) {
        if (to_coset[a] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(a);
        for (int n : d.members) to_coset[g.mult(a, n)] = c;
    }
    const int q = static_cast<int>(reps.size());
    std::vector<std::string> labels(q);
    for (int c = 0; c < q; ++c) labels[c] = "[" + g.labels[reps[c]] + "]";
    std::vector<int> table(static_cast<size_t>(q) * q);
    for (int c1 = 0; c1 < q; ++c1)
        for (int c2 = 0; c2 < q; ++c2)
            table[static_cast<size_t>(c1) * q + c2] = to_coset[g.mult(reps[c1], reps[c2])];
    Abelianization out;
    out.quotient = FiniteGroup::from_table(std::move(labels), std::move(table));
    out.to_coset = std::move(to_coset);
    if (!out.quotient.is_abelian()) throw InvalidGroup("abelianization is not abelian");
    return out;
}

std::vector<int> generating_set(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<int> closed{g.identity};
    auto in_closed = [&](int a) { return std::binary_search(closed.begin(), closed.end(), a); };
    while (static_cast<int>(closed.size()) < g.order) {
        int best = -1, best_ord = 0;
        for (int a = 0; a < g.order; ++a)
            if (!in_closed(a) && g.element_order(a) > best_ord) {
                best = a;
                best_ord = g.element_order(a);
            }
        gens.push_back(best);
        closed = closure_of(g, gens);
        std::sort(closed.begin(), closed.end());
    }
    return gens;
}

std::vector<Character> characters(const FiniteGroup& g) {
    Abelianization ab = abelianization(g);
    const FiniteGroup& q = ab.quotient;
    std::vector<int> gens = generating_set(q);  // empty when |Q| == 1

    // Expansion order: BFS over the quotient recording how each element is
    // reached from the generators.
    std::vector<int> parent(q.order, -1), via(q.order, -1);
    std::vector<int> bfs{q.identity};
    for (size_t head = 0; head < bfs.size(); ++head) {
        int cur = bfs[head];
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int nxt = q.mult(cur, gens[gi]);
            if (nxt != q.identity && parent[nxt] < 0) {
                parent[nxt] = cur;
                via[nxt] = static_cast<int>(gi);
                bfs.push_back(nxt);
            }
        }
    }
    if (static_cast<int>(bfs.size()) != q.order) throw InvalidGroup("generators do not generate");

    std::vector<int> gen_order(gens.size());
    for (size_t gi = 0; gi < gens.size(); ++gi) gen_order[gi] = q.element_order(gens[gi]);

    std::vector<Character> out;
    std::vector<int> choice(gens.size(), 0);
    auto build_candidate = [&]() -> std::optional<std::vector<cx>> {
        std::vector<cx> val(q.order);
        val[q.identity] = 1.0;
        std::vector<cx> gen_val(gens.size());
        for (size_t gi = 0; gi < gens.size(); ++gi)
            gen_val[gi] = std::polar(1.0, 2.0 * kPi * choice[gi] / gen_order[gi]);
        for (size_t head = 1; head < bfs.size(); ++head) {
            int el = bfs[head];
            val[el] = val[parent[el]] * gen_val[via[el]];
        }
        for (int a = 0; a < q.order; ++a)
            for (int b = 0; b < q.order; ++b)
                if (std::abs(val[a] * val[b] - val[q.mult(a, b)]) > 1e-9) return std::nullopt;
        return val;
    };

    while (true) {
        if (auto val = build_candidate()) {
            Character chi;
            chi.values.resize(g.order);
            for (int a = 0; a < g.order; ++a) chi.values[a] = (*val)[ab.to_coset[a]];
            out.push_back(std::move(chi));
        }
        // next multi-index
        size_t k = 0;
        for (; k < gens.size(); ++k) {
            if (++choice[k] < gen_order[k]) break;
            choice[k] = 0;
        }
        if (k == gens.size()) break;
    }
    if (static_cast<int>(out.size()) != q.order)
        throw InvalidGroup("character count does not match abelianization order");

    // Canonical order: trivial character first, then lexicographic on rounded phases.
    auto key = [&](const Character& c) {
        std::vector<long long> k;
        k.reserve(c.values.size());
        for (const cx& v : c.values) {
            double a = std::arg(v);
            if (a < -1e-9) a += 2 * kPi;
            k.push_back(std::llround(a * 1e6));
        }
        return k;
    };
    std::sort(out.begin(), out.end(),
              [&](const Character& a, const Character& b) { return key(a) < key(b); });
    return out;
}

namespace {

std::vector<int> order_histogram(const FiniteGroup& g) {
    std::vector<int> h(g.order + 1, 0);
    for (int a = 0; a < g.order; ++a) ++h[g.element_order(a)];
    return h;
}

struct IsoSearch {
    const FiniteGroup& g;
    const FiniteGroup& h;
    std::vector<int> gens;
    std::vector<int> bfs_order, parent, via;

    bool extend(std::vector<int>& images, size_t k) {
        if (k == gens.size()) return check_full(images);
        const int want_order = g.element_order(gens[k]);
        for (int cand = 0; cand < h.order; ++cand) {
            if (h.element_order(cand) != want_order) continue;
            images[k] = cand;
            if (extend(images, k + 1)) return true;
        }
        return false;
    }

    bool check_full(const std::vector<int>& gen_images) {
        std::vector<int> img(g.order, -1);
        img[g.identity] = h.identity;
        for (int el : bfs_order) {
            if (el == g.identity) continue;
            img[el] = h.mult(img[parent[el]], gen_images[via[el]]);
        }
        std::vector<bool> hit(h.order, false);
        for (int a = 0; a < g.order; ++a) {
            if (img[a] < 0 || hit[img[a]]) return false;
            hit[img[a]] = true;
        }
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b)
                if (img[g.mult(a, b)] != h.mult(img[a], img[b])) return false;
        return true;
    }
};

}  // namespace

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
    if (g.order != h.order) return false;
    if (g.order > 64) throw Error("is_isomorphic supports order <= 64");
    if (order_histogram(g) != order_histogram(h)) return false;
    if (center(g).order() != center(h).order()) return false;
    if (derived_subgroup(g).order() != derived_subgroup(h).order()) return false;

    IsoSearch search{g, h, generating_set(g), {}, {}, {}};
    search.parent.assign(g.order, -1);
    search.via.assign(g.order, -1);
    search.bfs_order.push_back(g.identity);
    for (size_t head = 0; head < search.bfs_order.size(); ++head) {
        int cur = search.bfs_order[head];
        for (size_t gi = 0; gi < search.gens.size(); ++gi) {
            int nxt = g.mult(cur, search.gens[gi]);
            if (nxt != g.identity && search.parent[nxt] < 0) {
                search.parent[nxt] = cur;
                search.via[nxt] = static_cast<int>(gi);
                search.bfs_order.push_back(nxt);
            }
        }
    }
    std::vector<int> images(search.gens.size(), -1);
    return search.extend(images, 0);
}

MatrixGroup group_from_matrix_generators(const std::vector<Mat>& generators,
                                         const std::vector<std::string>& gen_labels,
                                         int max_order, double tol) {
    if (generators.empty()) throw Error("no generators");
    const Eigen::Index d = generators[0].rows();
    std::vector<Mat> elems{Mat::Identity(d, d)};
    std::vector<std::string> labels{"e"};
    auto find = [&](const Mat& m) -> int {
        for (size_t i = 0; i < elems.size(); ++i)
            if ((elems[i] - m).cwiseAbs().maxCoeff() < tol) return static_cast<int>(i);
        return -1;
    };
    // breadth-first closure
    for (size_t head = 0; head < elems.size(); ++head) {
        for (size_t gi = 0; gi < generators.size(); ++gi) {
            Mat p = elems[head] * generators[gi];
            if (find(p) < 0) {
                elems.push_back(p);
                labels.push_back(head == 0 ? gen_labels[gi] : labels[head] + "*" + gen_labels[gi]);
                if (static_cast<int>(elems.size()) > max_order)
                    throw Error("matrix group closure exceeded max_order");
            }
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int c = find(elems[a] * elems[b]);
            if (c < 0) throw Error("matrix set not closed under multiplication");
            table[static_cast<size_t>(a) * n + b] = c;
        }
    MatrixGroup out;
    out.group = FiniteGroup::from_table(std::move(labels), std::move(table));
    out.elements = std::move(elems);
    return out;
}

nlohmann::json to_json(const FiniteGroup& g) {
    nlohmann::json j;
    j["order"] = g.order;
    j["labels"] = g.labels;
    std::vector<std::vector<int>> rows(g.order, std::vector<int>(g.order));
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) rows[a][b] = g.mult(a, b);
    j["table"] = rows;
    return j;
}

FiniteGroup group_from_json(const nlohmann::json& j) {
    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
    auto rows = j.at("table").get<std::vector<std::vector<int>>>();
    std::vector<int> table;
    for (const auto& r : rows) table.insert(table.end(), r.begin(), r.end());
    return FiniteGroup::from_table(std::move(labels), std::move(table));
}

}  // namespace spchain::groups
