#include "infix/classify.hpp"

#include "infix/errors.hpp"

namespace infix {

namespace {

/// Elements of the two-sided ideal generated by Acc, as a membership flag array.
std::vector<std::uint8_t> accepting_ideal(const Monoid& m) {
    std::vector<std::uint8_t> in(m.size(), 0);
    std::vector<Elem> queue;
    for (Elem x = 0; x < m.size(); ++x)
        if (m.accepting(x)) {
            in[x] = 1;
            queue.push_back(x);
        }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Elem x = queue[i];
        for (std::size_t a = 0; a < m.letters(); ++a) {
            Elem g = m.of(static_cast<Letter>(a));
            for (Elem y : {m.mul_letter(x, static_cast<Letter>(a)), m.mul(g, x)})
                if (!in[y]) {
                    in[y] = 1;
                    queue.push_back(y);
                }
        }
    }
    return in;
}

}  // namespace

bool is_zg(const Monoid& m) {
    const std::uint64_t w1 = std::uint64_t{m.omega()} + 1;
    for (Elem x = 0; x < m.size(); ++x) {
        Elem xw1 = m.pow(x, w1);
        for (std::size_t a = 0; a < m.letters(); ++a) {
            Elem g = m.of(static_cast<Letter>(a));
            if (m.mul(g, xw1) != m.mul(xw1, g)) return false;
        }
    }
    return true;
}

bool is_aperiodic(const Monoid& m) {
    for (Elem x = 0; x < m.size(); ++x) {
        Elem xw = m.pow(x, m.omega());
        if (xw != m.mul(xw, x)) return false;
    }
    return true;
}

bool is_extensible(const Monoid& m) {
    auto ideal = accepting_ideal(m);
    for (Elem x = 0; x < m.size(); ++x)
        if (ideal[x] && !m.accepting(x)) return false;
    return true;
}

bool is_semi_extensible_zg(const Monoid& m) {
    if (!is_zg(m)) return false;
    auto ideal = accepting_ideal(m);
    for (std::size_t a = 0; a < m.letters(); ++a) {
        auto letter = static_cast<Letter>(a);
        if (has_letter(m.neutral(), letter)) continue;
        Elem aw = m.pow(m.of(letter), m.omega());
        for (Elem x = 0; x < m.size(); ++x)
            if (ideal[x] && !m.accepting(m.mul(x, aw))) return false;
    }
    return true;
}

std::uint32_t threshold(const Monoid& m) {
    if (!is_semi_extensible_zg(m)) throw NotSemiExtensible("language is not semi-extensible ZG");
    return static_cast<std::uint32_t>(std::max<std::size_t>(2, m.size() + 1));
}

ClassificationReport classify(const Monoid& m) {
    ClassificationReport r;
    r.is_zg = is_zg(m);
    r.is_aperiodic = is_aperiodic(m);
    r.is_extensible = is_extensible(m);
    r.is_semi_extensible_zg = r.is_zg && is_semi_extensible_zg(m);
    if (r.is_semi_extensible_zg) r.threshold = threshold(m);
    r.neutral = m.neutral();
    r.monoid_size = m.size();
    return r;
}

ClassificationReport classify(const Dfa& min_dfa) { return classify(Monoid(min_dfa)); }

}  // namespace infix
