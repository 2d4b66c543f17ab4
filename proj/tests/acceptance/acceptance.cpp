// Acceptance suite: one PASS/FAIL line per criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "resonance/checks/gates.hpp"

namespace checks = resonance::checks;

namespace {

constexpr std::uint64_t kSeed = 42;

// Runtime limits in seconds; criteria without one are unbounded.
const std::map<std::string, double> kTimeLimits{{"c1", 10}, {"c2", 30}, {"c3", 60}, {"c4", 5}, {"c8", 300}};

struct Captured {
  int status = -1;
  std::string out;
};

Captured capture(const std::string& command) {
  Captured c;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return c;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) c.out.append(buffer.data(), n);
  c.status = pclose(pipe);
  return c;
}

void report(bool pass, const std::string& id, const std::string& title, double seconds, const std::string& note) {
  std::printf("%s %-4s %-62s %8.2fs  %s\n", pass ? "PASS" : "FAIL", id.c_str(), title.c_str(), seconds,
              note.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  int failures = 0;
  checks::Context context(kSeed);
  for (const auto& info : checks::gate_catalog()) {
    if (!checks::is_acceptance_gate(info.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    const checks::GateResult r = checks::run_gate(info.id, context);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string note;
    bool pass = r.pass;
    if (const auto limit = kTimeLimits.find(info.id); limit != kTimeLimits.end() && seconds >= limit->second) {
      pass = false;
      note = "over the " + std::to_string(static_cast<int>(limit->second)) + "s limit; ";
    }
    if (r.measured.contains("error")) note += "error: " + r.measured["error"].get<std::string>();
    report(pass, info.id, info.title, seconds, note);
    if (!pass) {
      ++failures;
      std::cerr << r.measured.dump() << "\n";
    }
  }

  const auto start = std::chrono::steady_clock::now();
  const std::string command = std::string("\"") + RESONANCE_CLI_PATH + "\" verify --json --seed 42";
  const Captured first = capture(command);
  const Captured second = capture(command);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string note;
  bool parsed = false;
  try {
    parsed = nlohmann::json::parse(first.out).contains("gates");
  } catch (const nlohmann::json::exception&) {
    note = "output is not JSON; ";
  }
  const bool same = !first.out.empty() && first.out == second.out;
  note += same ? std::to_string(first.out.size()) + " identical bytes" : "outputs differ";
  const bool pass = parsed && same && first.status == 0 && second.status == 0;
  report(pass, "c12", "verify --seed 42 twice gives byte-identical JSON", seconds, note);
  if (!pass) ++failures;

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
