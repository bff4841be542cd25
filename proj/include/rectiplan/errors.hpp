#pragma once

#include <stdexcept>
#include <string>

namespace rectiplan {

// Reasons an input can be rejected before (or while) testing. These are
// precondition failures, not "not drawable" verdicts.
enum class reject_reason {
    not_biconnected,
    simple_cycle,
    not_series_parallel,
    not_independent_parallel,
    degree_exceeded,
    cap_exceeded,
};

inline const char* reject_slug(reject_reason r) {
    switch (r) {
        case reject_reason::not_biconnected:          return "not-biconnected";
        case reject_reason::simple_cycle:             return "simple-cycle";
        case reject_reason::not_series_parallel:      return "not-series-parallel";
        case reject_reason::not_independent_parallel: return "not-independent-parallel";
        case reject_reason::degree_exceeded:          return "degree-exceeded";
        case reject_reason::cap_exceeded:             return "cap-exceeded";
    }
    return "unknown";
}

// Thrown when an input fails a structural precondition. Callers dispatch on
// `reason`; the CLI maps these to exit code 2.
class reject_error : public std::runtime_error {
public:
    reject_reason reason;

    explicit reject_error(reject_reason r, const std::string& detail = "")
        : std::runtime_error(detail.empty() ? reject_slug(r)
                                            : std::string(reject_slug(r)) + ": " + detail),
          reason(r) {}
};

// Line-aware parse failure for the text and JSON graph formats.
class parse_error : public std::runtime_error {
public:
    int line;  // 1-based; 0 when no line applies

    parse_error(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// An invariant that must hold whenever the caller's precondition holds was
// violated. Raised instead of silently patching so that algebra bugs surface.
// The CLI maps these to exit code 3.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace rectiplan
