#ifndef NK_TYPES_HPP
#define NK_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nk {

using VertexId = std::int32_t;
using Value = std::int64_t;

// The four problem flavors. 1N: a selected vertex earns profit iff it has a
// selected (out-)neighbor or no (out-)neighbors at all. All-N: iff all of its
// (out-)neighbors are selected. Hard variants additionally require every
// selected vertex to satisfy its condition for the set to be feasible.
enum class Variant {
    Hard1N,
    HardAll,
    Relaxed1N,
    RelaxedAll,
};

constexpr bool is_hard(Variant v) {
    return v == Variant::Hard1N || v == Variant::HardAll;
}

constexpr bool is_one_neighbor(Variant v) {
    return v == Variant::Hard1N || v == Variant::Relaxed1N;
}

constexpr bool is_all_neighbor(Variant v) {
    return v == Variant::HardAll || v == Variant::RelaxedAll;
}

inline std::string variant_name(Variant v) {
    switch (v) {
    case Variant::Hard1N: return "hard-1n";
    case Variant::HardAll: return "hard-all";
    case Variant::Relaxed1N: return "relaxed-1n";
    case Variant::RelaxedAll: return "relaxed-all";
    }
    return "?";
}

inline Value checked_add(Value a, Value b) {
    Value out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in weight/profit sum");
    return out;
}

} // namespace nk

#endif
