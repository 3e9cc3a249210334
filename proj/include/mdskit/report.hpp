#pragma once

#include <string>
#include <utility>

namespace mdskit {

// Outcome of a verifier. `detail` holds key=value fragments describing the
// first violation found; empty on success.
struct Report {
    bool ok = true;
    std::string detail;

    explicit operator bool() const { return ok; }

    static Report pass() { return {}; }
    static Report fail(std::string d) { return {false, std::move(d)}; }
};

} // namespace mdskit
