#pragma once

#include <gmpxx.h>

#include <string>

#include "klr/error.hpp"

namespace klr {

// All coefficients are exact rationals; nothing in the engine may round.
using Rat = mpq_class;

inline std::string rat_str(const Rat& q)
{
    return q.get_str();
}

// Accepts "p", "-p", "p/q" with q > 0 after canonicalization.
inline Rat parse_rat(const std::string& s)
{
    if (s.empty())
        throw error(errc::config_error, "empty rational literal");
    try {
        Rat q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw error(errc::config_error, "bad rational literal '" + s + "'");
    }
}

} // namespace klr
