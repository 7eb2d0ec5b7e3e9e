#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gpade/constants.hpp"

namespace gpade {

enum class Status { certified, violated, indeterminate, hypothesis_unmet };

std::string to_string(Status s);
// yes -> certified, no -> `when_no`, unknown -> indeterminate
Status status_of(Tri t, Status when_no = Status::violated);
Status status_of(bool ok);
std::string to_string(Tri t);

struct RunConfig {
    long precision_digits = 128;
    long max_precision_digits = 2048;
    EffectiveConfig effective;
    std::string source = "defaults";
};

// JSON object with optional keys precision, max_precision (decimal digits) and h0, h1, h2 (rational
// strings or integers). Unknown keys are rejected.
RunConfig load_run_config(const std::string& path);

using Fields = std::vector<std::pair<std::string, std::string>>;

// Line-oriented report, one record per line:
//   command <argv...>
//   config key=value ...
//   value <name> = <text>
//   check <name> <status> key=value ...
// Values never contain newlines; the same inputs always give byte-identical text.
class Report {
public:
    void command(const std::vector<std::string>& argv);
    void config(const RunConfig& cfg);
    void value(const std::string& name, const std::string& text);
    void value(const std::string& name, const Integer& x) { value(name, to_string(x)); }
    void value(const std::string& name, const Rational& x) { value(name, to_string(x)); }
    // Intervals are printed as exact endpoint pairs.
    void value(const std::string& name, const IntervalReal& x) { value(name, x.to_exact_string()); }
    void check(const std::string& name, Status status, const Fields& fields = {});
    void note(const std::string& text);

    [[nodiscard]] bool any_violated() const { return violated_; }
    [[nodiscard]] const std::string& text() const { return text_; }

private:
    std::string text_;
    bool violated_ = false;
};

// Decimal enclosure "[lo, hi]" of an interval for human reading, next to the exact record.
std::string decimal(const IntervalReal& x, int sig = 20);

} // namespace gpade
