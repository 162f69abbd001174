#pragma once

#include <array>
#include <optional>
#include <string>

#include "strata/pattern.hpp"

namespace strata {

/// Connectedness facts restricted to what is known at pattern level: strata
/// with order sum -4 are connected; Q(12) and Q(-1,9) are known to have two
/// components; everything else is reported Unknown.
struct Connectedness {
    enum class Kind { Connected, KnownMultiComponent, Unknown };
    Kind kind = Kind::Unknown;
    int component_count = 0;  // set when kind == KnownMultiComponent

    static Connectedness connected() { return {Kind::Connected, 1}; }
    static Connectedness multi(int count) { return {Kind::KnownMultiComponent, count}; }
    static Connectedness unknown() { return {Kind::Unknown, 0}; }

    friend bool operator==(const Connectedness&, const Connectedness&) = default;

    std::string str() const {
        switch (kind) {
            case Kind::Connected: return "connected";
            case Kind::KnownMultiComponent: return "components=" + std::to_string(component_count);
            case Kind::Unknown: return "unknown";
        }
        return "unknown";
    }
};

/// Non-emptiness of a quadratic stratum. Exactly four exceptional patterns
/// are empty: Q(), Q(1,-1), Q(4), Q(1,3). Marked points are ignored in the
/// comparison (the exceptional list never carries them).
inline bool is_nonempty(const Pattern& p) {
    if (!p.is_quadratic()) throw Error(ErrorKind::flavor, "non-emptiness facts apply to quadratic patterns only");
    const Pattern stripped = p.without_marked_points();
    const std::array<Pattern, 4> exceptions = {
        Pattern::empty(Flavor::Quadratic),
        Pattern::quadratic({1, -1}),
        Pattern::quadratic({4}),
        Pattern::quadratic({1, 3}),
    };
    for (const auto& e : exceptions)
        if (stripped == e) return false;
    return true;
}

/// Component-count facts for quadratic strata (marked points ignored in the
/// two known multi-component comparisons).
inline Connectedness connectedness_facts(const Pattern& p) {
    if (!p.is_quadratic()) return Connectedness::unknown();
    if (p.order_sum() == -4) return Connectedness::connected();
    const Pattern stripped = p.without_marked_points();
    if (stripped == Pattern::quadratic({12}) || stripped == Pattern::quadratic({9, -1}))
        return Connectedness::multi(2);
    return Connectedness::unknown();
}

/// Pattern-level facts of a stratum. `nonempty` is null for Abelian patterns
/// (Abelian non-emptiness is outside this library's fact base).
struct StratumFacts {
    long long genus = 0;
    long long dimension = 0;
    std::optional<bool> nonempty;
    Connectedness connectedness;
};

inline StratumFacts stratum_facts(const Pattern& p) {
    StratumFacts f;
    f.genus = genus(p);
    f.dimension = dimension(p);
    if (p.is_quadratic()) {
        f.nonempty = is_nonempty(p);
        f.connectedness = f.nonempty.value() ? connectedness_facts(p) : Connectedness::unknown();
    } else {
        f.connectedness = Connectedness::unknown();
    }
    return f;
}

}  // namespace strata
