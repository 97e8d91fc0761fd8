#pragma once

#include <optional>

#include "catch_amalgamated.hpp"
#include "nok/arith.hpp"
#include "nok/errors.hpp"

// Kind of the nok::Error thrown by f, or nullopt when it returns normally.
template <class F> std::optional<nok::ErrorKind> error_kind(F &&f) {
    try {
        f();
    } catch (const nok::Error &e) {
        return e.kind();
    }
    return std::nullopt;
}

inline nok::RationalVector rv(std::initializer_list<const char *> xs) {
    nok::RationalVector v;
    for (const auto *x : xs)
        v.push_back(nok::parse_rational(x));
    return v;
}
