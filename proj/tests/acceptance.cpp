// Runs every acceptance criterion and prints one line per criterion.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include "dcrit/suite.hpp"

namespace {

struct Output {
  int code;
  std::string text;
};

Output capture(const std::string& cmd) {
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, {}};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void line(int id, const std::string& name, bool ok, double secs, double limit, const std::string& note) {
  std::printf("[%s] %2d %-28s %8.3fs (limit %gs)%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(), secs, limit,
              note.empty() ? "" : "  ", note.c_str());
}

}  // namespace

int main() {
  int failures = 0;
  for (const auto& c : dcrit::acceptance_criteria()) {
    auto start = std::chrono::steady_clock::now();
    dcrit::CheckResult r;
    try {
      r = c.run(0);
    } catch (const std::exception& e) {
      r.status = dcrit::Status::Error;
      r.detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = r.passed() && secs < c.time_limit_seconds;
    std::string note = r.counterexample ? *r.counterexample : r.detail;
    if (r.passed() && !ok) note = "time limit exceeded";
    line(c.id, c.name, ok, secs, c.time_limit_seconds, note);
    if (!ok) ++failures;
  }

  const std::string cmd = std::string(DCRIT_CLI_PATH) + " suite --seed 0 --json --no-timing";
  auto start = std::chrono::steady_clock::now();
  auto a = capture(cmd);
  auto b = capture(cmd);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = a.code == 0 && b.code == 0 && !a.text.empty() && a.text == b.text;
  line(11, "determinism", ok, secs, 600, ok ? std::to_string(a.text.size()) + " identical bytes" : "outputs differ");
  if (!ok) ++failures;

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
