#include "fuchscode/fuchsian.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace fxc {

namespace {

QuadHalfInt qh(long u, long v, int a) {
    return {BigInt(u), BigInt(v), a};
}

QuadMatrix generator_inverse(const QuadMatrix& m) {
    return mat_inv(m);
}

double entry(const QuadMatrix& m, int r, int c) {
    return m.at(r, c).to_double();
}


Side circle_side(Side::Kind kind, QuadMatrix g, std::string label) {
    IsometricCircle c = isometric_circle(g);
    Side s{kind, std::move(g), std::move(label), c.center, c.radius};
    return s;
}

// Breadth-first expansion used for side derivation: words over the
// generator alphabet {g1, g1^-1, g2, g2^-1, g3, g3^-1}, one representative
// per sign class, shortest word first.
struct Candidate {
    QuadMatrix m;
    std::string label;
};

std::vector<Candidate> enumerate_words(const std::vector<QuadMatrix>& gens, int max_len) {
    std::vector<std::pair<std::string, QuadMatrix>> alphabet;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::string base = "g" + std::to_string(i + 1);
        alphabet.emplace_back(base, gens[i]);
        QuadMatrix inv = generator_inverse(gens[i]);
        if (!mat_eq_mod_sign(inv, gens[i])) alphabet.emplace_back(base + "^-1", inv);
    }

    std::vector<Candidate> out;
    std::unordered_set<std::string> seen;
    QuadMatrix id = QuadMatrix::identity(gens[0].a());
    seen.insert(canonical_sign_key(id));

    std::vector<Candidate> frontier{{id, ""}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Candidate> next;
        for (const Candidate& c : frontier) {
            for (const auto& [name, g] : alphabet) {
                QuadMatrix m = mat_mul(c.m, g);
                std::string key = canonical_sign_key(m);
                if (!seen.insert(key).second) continue;
                std::string label = c.label.empty() ? name : c.label + "*" + name;
                next.push_back({m, label});
                out.push_back(next.back());
            }
        }
        frontier = std::move(next);
    }
    return out;
}

// Dirichlet side list for a group whose fundamental domain is not printed.
// Every reduced word gamma up to the length bound (one per sign class)
// contributes the perpendicular bisector of tau and q = gamma^-1(tau): the
// geodesic |z - m| = r equidistant from both, with tau on one side. The
// domain is the intersection of the tau-sides; a violated side means z is
// strictly closer to q than to tau, so applying gamma strictly decreases
// d(z, tau) and the reduction terminates unconditionally. Only bisectors
// that actually bound the intersection are kept, ordered by distance of the
// translate from tau, nearest first.
void derive_sides(Group& g, int word_len) {
    struct Bis {
        double w, u, c;  // f(z) = w|z|^2 - 2u Re z + c, tau-side is f >= 0
        double m, r;     // bisector circle
        double key;
        QuadMatrix mat;
        std::string label;
    };
    const double ty = g.tau.imag();
    std::vector<Bis> cands;
    for (Candidate& cand : enumerate_words(g.generators, word_len)) {
        Complex q = mobius(mat_inv(cand.m), g.tau);
        double w = 1.0 / q.imag() - 1.0 / ty;
        if (std::abs(w) < 1e-12)
            throw DomainError("translate at the center height: bisector is not a circle");
        double u = q.real() / q.imag();
        double c = std::norm(q) / q.imag() - std::norm(g.tau) / ty;
        double m = u / w;
        double r2 = m * m - c / w;
        if (r2 <= 0.0) throw DomainError("degenerate bisector for " + cand.label);
        double key = std::norm(q - g.tau) / q.imag();
        cands.push_back({w, u, c, m, std::sqrt(r2), key, std::move(cand.m), std::move(cand.label)});
    }

    // A bisector bounds the domain iff its circle carries an arc satisfying
    // every other constraint. With all centers real, each constraint
    // restricted to the circle z = m_i + r_i e^{i theta} reads
    // A + B cos(theta) >= 0, so the feasible set is an interval in
    // cos(theta) and the test is a running [lo, hi] intersection.
    std::vector<Bis> kept;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        const Bis& si = cands[i];
        double lo = -1.0, hi = 1.0;
        for (std::size_t j = 0; j < cands.size() && lo < hi; ++j) {
            if (j == i) continue;
            const Bis& sj = cands[j];
            double A = sj.w * (si.m * si.m + si.r * si.r) - 2.0 * sj.u * si.m + sj.c;
            double B = 2.0 * si.r * (sj.w * si.m - sj.u);
            if (B > 0.0) lo = std::max(lo, -A / B);
            else if (B < 0.0) hi = std::min(hi, -A / B);
            else if (A < 0.0) lo = 1.0, hi = -1.0;
        }
        if (lo < hi - 1e-9) kept.push_back(si);
    }

    std::sort(kept.begin(), kept.end(), [](const Bis& x, const Bis& y) {
        if (x.key != y.key) return x.key < y.key;
        return x.label < y.label;
    });
    for (Bis& b : kept) {
        double dt = std::hypot(g.tau.real() - b.m, ty);
        Side::Kind kind = dt > b.r ? Side::Kind::CircleExt : Side::Kind::CircleInt;
        g.sides.push_back({kind, std::move(b.mat), std::move(b.label), b.m, b.r, -1});
    }
}

// Each side's owner must have its inverse owning another side; the pair
// index feeds the reduction loop's skip. The owner's translate of tau feeds
// its side-selection rule.
void finalize_sides(Group& g) {
    for (std::size_t i = 0; i < g.sides.size(); ++i) {
        QuadMatrix inv = mat_inv(g.sides[i].g);
        for (std::size_t j = 0; j < g.sides.size(); ++j) {
            if (mat_eq_mod_sign(g.sides[j].g, inv)) {
                g.sides[i].pair = static_cast<int>(j);
                break;
            }
        }
        if (g.sides[i].pair < 0)
            throw DomainError("unpaired side " + g.sides[i].label);
        g.sides[i].q = mobius(inv, g.tau);
        g.sides[i].inv_im_q = 1.0 / g.sides[i].q.imag();
    }
}

void build_alphabet(Group& g) {
    auto add = [&](const std::string& label, const QuadMatrix& m, std::unordered_set<std::string>& seen) {
        if (m.is_pm_identity()) return;
        if (seen.insert(canonical_sign_key(m)).second) g.alphabet.emplace_back(label, m);
    };
    std::unordered_set<std::string> seen;
    for (const Side& s : g.sides) add(s.label, s.g, seen);
    for (const Side& s : g.sides) add(s.label + "^-1", generator_inverse(s.g), seen);
}

Group build_d6() {
    const int a = 3;
    Group g;
    g.discriminant = 6;
    g.alg_a = 3;
    g.alg_b = -1;
    QuadMatrix g1(qh(1, 1, a), qh(3, -1, a), qh(-3, -1, a), qh(1, -1, a));
    QuadMatrix g2(qh(1, 1, a), qh(-3, 1, a), qh(3, 1, a), qh(1, -1, a));
    QuadMatrix g3(qh(0, 0, a), qh(2, 0, a), qh(-2, 0, a), qh(0, 0, a));
    g.generators = {g1, g2, g3};
    g.sides = {
        circle_side(Side::Kind::CircleExt, g1, "g1"),
        circle_side(Side::Kind::CircleExt, generator_inverse(g1), "g1^-1"),
        circle_side(Side::Kind::CircleExt, g2, "g2"),
        circle_side(Side::Kind::CircleExt, generator_inverse(g2), "g2^-1"),
        circle_side(Side::Kind::CircleInt, g3, "g3"),
    };
    g.M = 5;
    g.tau = Complex(0.0, 0.5);
    g.relations = {
        {"g1^3", {1, 1, 1}},
        {"g2^3", {2, 2, 2}},
        {"g3^2", {3, 3}},
        {"(g1^-1*g3*g2)^2", {-1, 3, 2, -1, 3, 2}},
    };
    g.printed_side_data = true;
    finalize_sides(g);
    build_alphabet(g);
    return g;
}

Group build_d10() {
    const int a = 2;
    Group g;
    g.discriminant = 10;
    g.alg_a = 2;
    g.alg_b = 5;
    QuadMatrix g1(qh(1, 1, a), qh(-1, 1, a), qh(-5, -5, a), qh(1, -1, a));
    QuadMatrix g2(qh(1, 1, a), qh(1, -1, a), qh(5, 5, a), qh(1, -1, a));
    QuadMatrix g3(qh(6, 4, a), qh(0, 0, a), qh(0, 0, a), qh(6, -4, a));
    g.generators = {g1, g2, g3};
    g.M = 6;
    g.tau = Complex(0.0, 0.4);
    g.relations = {
        {"g1^3", {1, 1, 1}},
        {"g2^3", {2, 2, 2}},
        {"(g3^-1*g1)^3", {-3, 1, -3, 1, -3, 1}},
        {"(g3^-1*g2)^3", {-3, 2, -3, 2, -3, 2}},
    };
    derive_sides(g, 4);
    finalize_sides(g);
    build_alphabet(g);
    return g;
}

Group build_d15() {
    const int a = 3;
    Group g;
    g.discriminant = 15;
    g.alg_a = 3;
    g.alg_b = 5;
    QuadMatrix g1(qh(-4, 3, a), qh(0, -1, a), qh(0, 5, a), qh(-4, -3, a));
    QuadMatrix g2(qh(3, 0, a), qh(1, 0, a), qh(5, 0, a), qh(3, 0, a));
    QuadMatrix g3(qh(4, 2, a), qh(0, 0, a), qh(0, 0, a), qh(4, -2, a));
    g.generators = {g1, g2, g3};
    g.M = 8;
    g.tau = Complex(0.0, 0.9);
    g.relations = {
        {"(g1*g3)^3", {1, 3, 1, 3, 1, 3}},
        {"(g3*g2^-1*g1*g2)^3", {3, -2, 1, 2, 3, -2, 1, 2, 3, -2, 1, 2}},
    };
    derive_sides(g, 4);
    finalize_sides(g);
    build_alphabet(g);
    return g;
}

} // namespace

QuadMatrix Group::word_to_matrix(const std::vector<int>& word) const {
    QuadMatrix m = QuadMatrix::identity(generators[0].a());
    for (int letter : word) {
        if (letter == 0 || std::abs(letter) > static_cast<int>(generators.size()))
            throw DomainError("relation word letter out of range");
        const QuadMatrix& gen = generators[std::abs(letter) - 1];
        m = mat_mul(m, letter > 0 ? gen : mat_inv(gen));
    }
    return m;
}

const Group& catalog(int discriminant) {
    static const std::map<int, Group> groups = [] {
        std::map<int, Group> m;
        m.emplace(6, build_d6());
        m.emplace(10, build_d10());
        m.emplace(15, build_d15());
        return m;
    }();
    auto it = groups.find(discriminant);
    if (it == groups.end())
        throw UnsupportedGroupError("no packaged group for discriminant " + std::to_string(discriminant));
    return it->second;
}

Complex mobius(const QuadMatrix& m, Complex z) {
    double a = entry(m, 0, 0), b = entry(m, 0, 1);
    double c = entry(m, 1, 0), d = entry(m, 1, 1);
    return (a * z + b) / (c * z + d);
}

IsometricCircle isometric_circle(const QuadMatrix& m) {
    if (m.at(1, 0).is_zero()) throw DomainError("no isometric circle: lower-left entry is zero");
    double c = entry(m, 1, 0);
    double d = entry(m, 1, 1);
    return {-d / c, 1.0 / std::abs(c)};
}

ImageCircle circle_image(const QuadMatrix& m, const IsometricCircle& s) {
    double a = entry(m, 0, 0), b = entry(m, 0, 1);
    double c = entry(m, 1, 0), d = entry(m, 1, 1);
    if (std::abs(c) < 1e-300) {
        return {false, (a * s.center + b) / d, std::abs(a / d) * s.radius};
    }
    double pole = -d / c;
    double gap = std::abs(s.center - pole);
    if (std::abs(gap - s.radius) <= 1e-12 * std::max(1.0, s.radius)) {
        Complex top = mobius(m, Complex(s.center, s.radius));
        return {true, top.real(), 0.0};
    }
    // The image circle's center is the image of the pole's inverse point;
    // a pole sitting exactly at the center inverts to infinity, which the
    // map sends to a/c.
    Complex center;
    if (gap == 0.0) {
        center = Complex(a / c, 0.0);
    } else {
        double w = s.center + s.radius * s.radius / (pole - s.center);
        center = mobius(m, Complex(w, 0.0));
    }
    double far = s.center + (s.center >= pole ? s.radius : -s.radius);
    Complex rim = mobius(m, Complex(far, 0.0));
    return {false, center.real(), std::abs(rim - center)};
}

MembershipResult in_fundamental_domain(const Group& g, Complex z, int skip_side, OpCounter* ops) {
    double x = z.real(), y = z.imag();
    for (int i = 0; i < static_cast<int>(g.sides.size()); ++i) {
        if (i == skip_side) continue;
        const Side& s = g.sides[i];
        if (ops) ops->circle_checks++;
        double dx = x - s.center;
        double d2 = dx * dx + y * y, r2 = s.radius * s.radius;
        bool violated = s.kind == Side::Kind::CircleExt ? d2 < r2 : d2 > r2;
        if (violated) return {false, i};
    }
    return {true, -1};
}

ReduceResult pra_reduce(const Group& g, Complex z, int max_iter, OpCounter* ops) {
    ReduceResult r{z, QuadMatrix::identity(g.generators[0].a()), 0};
    int skip = -1;
    for (int iter = 0;; ++iter) {
        // Among all violated sides, apply the one whose translate is
        // hyperbolically nearest to z: the new distance to tau equals the
        // distance to that translate, so it is the steepest descent step and
        // reproduces the cited depth values.
        int best = -1;
        double best_prox = 0.0;
        double x = r.z.real(), y = r.z.imag();
        for (int i = 0; i < static_cast<int>(g.sides.size()); ++i) {
            if (i == skip) continue;
            const Side& s = g.sides[i];
            if (ops) ops->circle_checks++;
            double dx = x - s.center;
            double d2 = dx * dx + y * y, r2 = s.radius * s.radius;
            bool violated = s.kind == Side::Kind::CircleExt ? d2 < r2 : d2 > r2;
            if (!violated) continue;
            double qx = x - s.q.real(), qy = y - s.q.imag();
            double prox = (qx * qx + qy * qy) * s.inv_im_q;
            if (best < 0 || prox < best_prox) {
                best = i;
                best_prox = prox;
            }
        }
        if (best < 0) return r;
        if (iter >= max_iter)
            throw NonTerminationError("reduction exceeded " + std::to_string(max_iter) + " steps");
        const Side& s = g.sides[best];
        r.z = mobius(s.g, r.z);
        r.t = mat_mul(s.g, r.t);
        r.iterations = iter + 1;
        if (ops) ops->step3_count++;
        skip = s.pair;
    }
}

bool interior_point(const Group& g, Complex z, double margin) {
    if (z.imag() <= margin) return false;
    for (const Side& s : g.sides) {
        double dist = std::hypot(z.real() - s.center, z.imag());
        if (s.kind == Side::Kind::CircleExt ? dist < s.radius + margin
                                            : dist > s.radius - margin)
            return false;
    }
    return true;
}

int element_depth(const Group& g, const QuadMatrix& m, std::optional<Complex> probe) {
    Complex p = probe.value_or(g.tau);
    if (!interior_point(g, p))
        throw CenterNotInteriorError("depth probe is not interior to the fundamental domain");
    return pra_reduce(g, mobius(m, p)).iterations;
}

std::vector<GroupElement> enumerate_Sk(const Group& g, int k) {
    std::vector<GroupElement> out;
    std::unordered_set<std::string> seen;
    QuadMatrix id = QuadMatrix::identity(g.generators[0].a());
    seen.insert(canonical_sign_key(id));
    out.push_back({id, {}, 0});

    std::vector<GroupElement> frontier = out;
    for (int len = 1; len <= k; ++len) {
        std::vector<GroupElement> next;
        for (const GroupElement& el : frontier) {
            for (int ai = 0; ai < static_cast<int>(g.alphabet.size()); ++ai) {
                QuadMatrix m = mat_mul(el.m, g.alphabet[ai].second);
                if (!seen.insert(canonical_sign_key(m)).second) continue;
                GroupElement child{m, el.word, 0};
                child.word.push_back(ai);
                child.depth = element_depth(g, m);
                next.push_back(child);
            }
        }
        for (const GroupElement& el : next)
            if (el.depth <= k) out.push_back(el);
        frontier = std::move(next);
    }
    std::stable_sort(out.begin(), out.end(), [](const GroupElement& x, const GroupElement& y) {
        if (x.depth != y.depth) return x.depth < y.depth;
        if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
        return x.word < y.word;
    });
    return out;
}

std::size_t theta(const Group& g, int k) {
    return enumerate_Sk(g, k).size();
}

std::string side_label(const Group& g, int side_index) {
    return g.sides.at(side_index).label;
}

} // namespace fxc
