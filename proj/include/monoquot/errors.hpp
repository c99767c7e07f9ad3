#pragma once

#include <stdexcept>
#include <string>

namespace mq {

// Raised when a computed result contradicts a structural identity that is
// supposed to hold unconditionally (cross-checked equivalences, vanishing
// certificates, long-exact-sequence bookkeeping). The CLI maps this to a
// distinct exit code so automation can tell "engine bug" from "bad input".
class theorem_violation : public std::logic_error {
public:
    explicit theorem_violation(const std::string& what) : std::logic_error(what) {}
};

} // namespace mq
