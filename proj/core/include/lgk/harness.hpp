#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "lgk/rootdatum.hpp"
#include "lgk/tits.hpp"

namespace lgk {

std::string_view version();

/// Parsed verification spec. Indices are stored 0-based; the file format uses
/// 1-based node numbers for `theta` and Weyl words.
struct SuiteSpec {
  struct Group {
    std::string family;
    int rank = 0;
    Isogeny isogeny = Isogeny::SimplyConnected;
  };
  struct Gamma {
    std::size_t order = 1;
    std::optional<Word> weyl;
    std::optional<std::vector<std::size_t>> theta;
    std::vector<IntMatrix> lattice;
  };
  struct Coeff {
    Int n = 24;
    std::vector<std::string> symbols;
    Int zetaMultiplier = 1;
    /// Images of the symbols under the generator of Gamma.
    std::map<std::string, nlohmann::json> symbolImages;
  };
  struct Data {
    bool random = true;
    std::uint64_t seed = 0;
    std::size_t instances = 50;
    std::optional<nlohmann::json> adata;
    std::optional<nlohmann::json> scaling;
  };
  struct Bounds {
    std::size_t weylCap = 10000;
    int searchDepth = 4;
    Int orderBound = 4;
  };

  std::optional<Group> group;
  std::optional<std::vector<std::size_t>> theta;
  Gamma gamma;
  Coeff coeff;
  Data data;
  InversionConvention convention = InversionConvention::InverseInversionSet;
  std::vector<std::string> suites;
  Bounds bounds;
  /// Normalized input, used for hashing.
  nlohmann::json canonical;
};

/// Names accepted in `suites`, in canonical order.
const std::vector<std::string>& suiteNames();

/// All parse functions throw InvalidSpec with a diagnostic.
SuiteSpec parseSuiteSpec(const nlohmann::json& j);
nlohmann::json tomlToJson(std::string_view text);
/// Reads JSON, or TOML when the extension is .toml.
SuiteSpec loadSuiteSpec(const std::filesystem::path& path);

/// Hex SHA-256 of the canonical JSON dump.
std::string specHash(const SuiteSpec& spec);

enum class CheckStatus { Pass, Fail, Skipped };
std::string_view to_string(CheckStatus s);

struct CheckRecord {
  std::string id;
  std::string suite;
  CheckStatus status = CheckStatus::Pass;
  nlohmann::json witness;
  double runtimeMs = 0;
};

struct RunOptions {
  /// Replaces data.seed when set.
  std::optional<std::uint64_t> seed;
  /// Record wall-clock times; reports are only byte-stable without them.
  bool timings = false;
};

struct Report {
  std::uint64_t seed = 0;
  std::string specHash;
  std::vector<CheckRecord> records;

  /// 0 when nothing failed, 1 otherwise.
  int exitCode() const;
  nlohmann::json toJson() const;
};

Report runSuite(const SuiteSpec& spec, const RunOptions& opts = {});

}  // namespace lgk
