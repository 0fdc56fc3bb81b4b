#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tek {

// Domain error carrying a stable machine-readable name (e.g. "NotAGroup",
// "InvalidCocycle") next to the human-readable witness text.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(std::string name, const std::string& what) {
    throw Error(std::move(name), what);
}

} // namespace tek
