#include "fuchscode/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "fuchscode/errors.hpp"

namespace fxc {

namespace {

// Printed element sets for the packaged constructions, as signed generator
// words: k stands for g_k, -k for its inverse.
using GenWord = std::vector<int>;

const std::map<std::pair<int, std::size_t>, std::vector<GenWord>>& preset_words() {
    static const std::map<std::pair<int, std::size_t>, std::vector<GenWord>> table = {
        {{6, 4}, {{}, {-1}}},
        {{6, 8}, {{}, {-1}, {-2}, {3}}},
        {{6, 16}, {{}, {-1}, {-2}, {3}, {1}, {2}, {-1, 3}, {-2, 3}}},
        {{10, 4}, {{}, {-1}}},
        {{10, 8}, {{}, {-1}, {-2}, {1}}},
        {{10, 16}, {{}, {-1}, {-2}, {1}, {2}, {1, -2}, {2, -1}, {-3}}},
        {{15, 4}, {{}, {2}}},
        {{15, 8}, {{}, {2}, {1}, {-2}}},
        {{15, 16}, {{}, {2}, {1}, {-2}, {-1}, {-3}, {-2, 1, 2}, {-2, -1, 2}}},
    };
    return table;
}

std::string word_label(const GenWord& w) {
    if (w.empty()) return "Id";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += '*';
        out += 'g';
        out += std::to_string(std::abs(w[i]));
        if (w[i] < 0) out += "^-1";
    }
    return out;
}

} // namespace

std::string element_label(const Group& g, const GroupElement& el) {
    if (el.word.empty()) return "Id";
    std::string out;
    for (std::size_t i = 0; i < el.word.size(); ++i) {
        if (i) out += '*';
        out += g.alphabet[el.word[i]].first;
    }
    return out;
}

Codebook build_code(const Group& g, const std::vector<LabeledElement>& S, Complex tau) {
    if (S.empty()) throw DomainError("empty element set");
    if (!interior_point(g, tau))
        throw CenterNotInteriorError("code center is not interior to the fundamental domain");

    Codebook c;
    c.discriminant = g.discriminant;
    c.tau = tau;
    for (const LabeledElement& el : S) {
        Complex p = mobius(el.m, tau);
        int depth = pra_reduce(g, p).iterations;
        int j = static_cast<int>(c.words.size());
        c.words.push_back({j, +1, el.m, el.label, p, depth});
        c.words.push_back({j + 1, -1, el.m, el.label, -p, depth});
        c.code_depth = std::max(c.code_depth, depth);
    }
    for (std::size_t i = 0; i < c.words.size(); ++i)
        for (std::size_t j = i + 1; j < c.words.size(); ++j)
            if (std::abs(c.words[i].point - c.words[j].point) < 1e-12)
                throw DuplicatePointError("codewords " + c.words[i].label + " and " +
                                          c.words[j].label + " collide");
    c.xs.reserve(c.words.size());
    c.ys.reserve(c.words.size());
    for (const Codeword& w : c.words) {
        c.xs.push_back(w.point.real());
        c.ys.push_back(w.point.imag());
    }
    return c;
}

std::vector<GroupElement> choose_S(const Group& g, std::size_t n) {
    if (n == 0) throw DomainError("empty element set");
    for (int k = 0; k <= 32; ++k) {
        std::vector<GroupElement> all = enumerate_Sk(g, k);
        if (all.size() >= n) {
            all.resize(n);
            return all;
        }
    }
    throw DomainError("element budget exceeded for n = " + std::to_string(n));
}

Codebook nuf_codebook(const Group& g, std::size_t q, std::optional<Complex> tau) {
    if (q < 2 || q % 2 != 0)
        throw DomainError("constellation size must be even, got " + std::to_string(q));
    Complex center = tau.value_or(g.tau);

    std::vector<LabeledElement> S;
    auto it = preset_words().find({g.discriminant, q});
    if (it != preset_words().end() && !tau.has_value()) {
        for (const GenWord& w : it->second)
            S.push_back({word_label(w), g.word_to_matrix(w)});
    } else {
        for (const GroupElement& el : choose_S(g, q / 2))
            S.push_back({element_label(g, el), el.m});
    }
    return build_code(g, S, center);
}

Codebook qam_codebook(int r) {
    if (r < 1) throw DomainError("QAM exponent must be positive");
    int top = (1 << r) - 1;
    Codebook c;
    for (int a = -top; a <= top; a += 2) {
        for (int b = -top; b <= top; b += 2) {
            std::ostringstream name;
            name << a << (b < 0 ? "-" : "+") << std::abs(b) << "i";
            int j = static_cast<int>(c.words.size());
            c.words.push_back({j, +1, std::nullopt, name.str(),
                               Complex(static_cast<double>(a), static_cast<double>(b)), 0});
        }
    }
    for (const Codeword& w : c.words) {
        c.xs.push_back(w.point.real());
        c.ys.push_back(w.point.imag());
    }
    return c;
}

double power_average(const Codebook& c) {
    double sum = 0.0;
    for (const Codeword& w : c.words) sum += std::norm(w.point);
    return sum / static_cast<double>(c.words.size());
}

double min_sq_distance(const Codebook& c) {
    if (c.words.size() < 2) throw DomainError("distance needs at least two codewords");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < c.words.size(); ++i)
        for (std::size_t j = i + 1; j < c.words.size(); ++j)
            best = std::min(best, std::norm(c.words[i].point - c.words[j].point));
    return best;
}

double min_sq_border_distance(const Codebook& c, const Group& g) {
    if (c.discriminant != g.discriminant)
        throw DomainError("codebook was built over a different group");
    double best = std::numeric_limits<double>::infinity();
    for (const Codeword& w : c.words) {
        // The mirror half of the code sees mirrored borders at equal distance.
        if (w.sign < 0) continue;
        if (!w.element) throw DomainError("borders are defined only for group codes");
        best = std::min(best, w.point.imag());
        for (const Side& s : g.sides) {
            ImageCircle ic = circle_image(*w.element, {s.center, s.radius});
            double d = ic.is_line
                           ? std::abs(w.point.real() - ic.center)
                           : std::abs(std::abs(w.point - Complex(ic.center, 0.0)) - ic.radius);
            best = std::min(best, d);
        }
    }
    return best * best;
}

double delta_ml(const Codebook& c) { return min_sq_distance(c) / power_average(c); }

double delta_pra(const Codebook& c, const Group& g) {
    return min_sq_border_distance(c, g) / power_average(c);
}

} // namespace fxc
