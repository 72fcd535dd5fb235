#pragma once

#include <string>

namespace parcoh {

/* Structured pass/fail: empty message = pass, otherwise the first failing
   witness spelled out. */
struct ValidationIssue {
    std::string message;
    bool ok() const { return message.empty(); }
};

} // namespace parcoh
