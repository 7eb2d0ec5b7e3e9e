#include "gpade/report.hpp"

#include <fstream>

#include <json.hpp>

#include "gpade/error.hpp"

namespace gpade {

std::string to_string(Status s)
{
    switch (s) {
    case Status::certified:
        return "certified";
    case Status::violated:
        return "violated";
    case Status::indeterminate:
        return "indeterminate";
    case Status::hypothesis_unmet:
        return "hypothesis-unmet";
    }
    return "indeterminate";
}

Status status_of(Tri t, Status when_no)
{
    switch (t) {
    case Tri::yes:
        return Status::certified;
    case Tri::no:
        return when_no;
    case Tri::unknown:
        break;
    }
    return Status::indeterminate;
}

Status status_of(bool ok)
{
    return ok ? Status::certified : Status::violated;
}

std::string to_string(Tri t)
{
    switch (t) {
    case Tri::yes:
        return "yes";
    case Tri::no:
        return "no";
    case Tri::unknown:
        break;
    }
    return "unknown";
}

namespace {

Rational rational_field(const nlohmann::json& v, const std::string& key)
{
    if (v.is_number_integer()) {
        return Rational(v.get<long>());
    }
    if (v.is_string()) {
        return parse_rational(v.get<std::string>());
    }
    throw PreconditionError("config key " + key + " must be an integer or a rational string");
}

long digits_field(const nlohmann::json& v, const std::string& key)
{
    if (!v.is_number_integer() || v.get<long>() < 1) {
        throw PreconditionError("config key " + key + " must be a positive integer");
    }
    return v.get<long>();
}

} // namespace

RunConfig load_run_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw PreconditionError("cannot open config file " + path);
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError("config file " + path + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw PreconditionError("config file " + path + " must hold a JSON object");
    }
    RunConfig cfg;
    cfg.source = path;
    for (const auto& [key, v] : doc.items()) {
        if (key == "precision") {
            cfg.precision_digits = digits_field(v, key);
        } else if (key == "max_precision") {
            cfg.max_precision_digits = digits_field(v, key);
        } else if (key == "h0") {
            cfg.effective.h0 = rational_field(v, key);
        } else if (key == "h1") {
            cfg.effective.h1 = rational_field(v, key);
        } else if (key == "h2") {
            cfg.effective.h2 = rational_field(v, key);
        } else {
            throw PreconditionError("unknown config key " + key);
        }
    }
    if (cfg.max_precision_digits < cfg.precision_digits) {
        throw PreconditionError("max_precision must be at least precision");
    }
    return cfg;
}

void Report::command(const std::vector<std::string>& argv)
{
    text_ += "command";
    for (const auto& a : argv) {
        text_ += ' ' + a;
    }
    text_ += '\n';
}

void Report::config(const RunConfig& cfg)
{
    // h0, h1, h2 are never derived numerically; whatever value is used stays unverified.
    text_ += "config precision_digits=" + std::to_string(cfg.precision_digits) +
             " max_precision_digits=" + std::to_string(cfg.max_precision_digits) +
             " h0=" + to_string(cfg.effective.h0) + " h1=" + to_string(cfg.effective.h1) +
             " h2=" + to_string(cfg.effective.h2) + " h_status=unverified source=" + cfg.source + '\n';
}

void Report::value(const std::string& name, const std::string& text)
{
    text_ += "value " + name + " = " + text + '\n';
}

void Report::check(const std::string& name, Status status, const Fields& fields)
{
    text_ += "check " + name + ' ' + to_string(status);
    for (const auto& [k, v] : fields) {
        text_ += ' ' + k + '=' + v;
    }
    text_ += '\n';
    violated_ = violated_ || status == Status::violated;
}

void Report::note(const std::string& text)
{
    text_ += "note " + text + '\n';
}

std::string decimal(const IntervalReal& x, int sig)
{
    return x.to_string(sig);
}

} // namespace gpade
