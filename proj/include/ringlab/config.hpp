#pragma once

#include <atomic>

namespace ringlab::config {

namespace detail {
inline std::atomic<int>& size_cap_storage() {
    static std::atomic<int> v{4096};
    return v;
}
inline std::atomic<int>& ideal_budget_storage() {
    static std::atomic<int> v{512};
    return v;
}
inline std::atomic<int>& mult_set_cap_storage() {
    static std::atomic<int> v{64};
    return v;
}
}  // namespace detail

/// Element-count cap for ring realization (default 4096). Constructions that
/// would exceed it fail eagerly with ErrorKind::CapExceeded.
inline int size_cap() { return detail::size_cap_storage().load(); }
inline void set_size_cap(int v) { detail::size_cap_storage().store(v); }

/// Ring-size budget for ideal enumeration (default 512).
inline int ideal_budget() { return detail::ideal_budget_storage().load(); }
inline void set_ideal_budget(int v) { detail::ideal_budget_storage().store(v); }

/// Max multiplicatively closed subsets considered per ring in sweeps.
inline int mult_set_cap() { return detail::mult_set_cap_storage().load(); }
inline void set_mult_set_cap(int v) { detail::mult_set_cap_storage().store(v); }

/// Hard ceiling: element indices are stored as 16-bit table entries.
inline constexpr int hard_size_limit = 65535;

}  // namespace ringlab::config
