#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wsi/network.hpp"

namespace wsi {

/// Parse or validation failure with the offending location and field.
class ScenarioError : public std::runtime_error {
  public:
    ScenarioError(std::string origin, int line, std::string field, const std::string& what)
        : std::runtime_error(origin + ":" + std::to_string(line) + ": " + what +
                             (field.empty() ? "" : " (field '" + field + "')")),
          origin_(std::move(origin)),
          line_(line),
          field_(std::move(field)) {}

    const std::string& origin() const { return origin_; }
    int line() const { return line_; }
    const std::string& field() const { return field_; }

  private:
    std::string origin_;
    int line_;
    std::string field_;
};

enum class SweepExperiment { Eavesdropping, Spoofing };

struct SweepSpec {
    bool present = false;
    SweepExperiment experiment = SweepExperiment::Eavesdropping;
    std::string node;   // node whose coordinate is swept
    char coord = 'x';   // 'x' or 'y'
    double from = 0.0;
    double to = 0.0;
    double step = 1.0;
};

struct ScenarioDoc {
    Scenario scenario;
    SweepSpec sweep;
    std::uint64_t seed = 0;
};

/// Parses the line-oriented scenario grammar (see README). Unknown record
/// types or keys are rejected naming the offender; every diagnostic carries
/// the source line.
ScenarioDoc parse_scenario(std::string_view text, const std::string& origin);

/// Reads and parses a scenario file.
ScenarioDoc load_scenario(const std::string& path);

}  // namespace wsi
