// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. The CLI checks spawn the real `reals` binary.

#include "reals/approx.hpp"
#include "reals/cut.hpp"
#include "reals/embed.hpp"
#include "reals/real.hpp"

#include "support.hpp"

#include <json.hpp>

#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <fcntl.h>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

extern char **environ;

namespace {

using namespace reals;
using Clock = std::chrono::steady_clock;

struct Outcome {
  std::string out;
  int code = -1;
};

Outcome run_cli(const std::vector<std::string> &args) {
  std::vector<std::string> full{REALS_CLI_PATH};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<char *> argv;
  for (std::string &a : full) {
    argv.push_back(a.data());
  }
  argv.push_back(nullptr);

  int fds[2];
  if (pipe(fds) != 0) {
    return {};
  }
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, fds[1], STDOUT_FILENO);
  posix_spawn_file_actions_addclose(&actions, fds[0]);
  posix_spawn_file_actions_addopen(&actions, STDERR_FILENO, "/dev/null",
                                   O_WRONLY, 0);
  pid_t pid = 0;
  int rc = posix_spawn(&pid, argv[0], &actions, nullptr, argv.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  close(fds[1]);
  Outcome result;
  if (rc != 0) {
    close(fds[0]);
    return result;
  }
  char buf[4096];
  ssize_t got = 0;
  while ((got = read(fds[0], buf, sizeof buf)) > 0) {
    result.out.append(buf, static_cast<std::size_t>(got));
  }
  close(fds[0]);
  int status = 0;
  waitpid(pid, &status, 0);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool agree(const Real &x, const Real &y, const BigInt &n) {
  SignedInterval a = rational_interval(x, n);
  SignedInterval b = rational_interval(y, n);
  return !(a.hi < b.lo) && !(b.hi < a.lo);
}

const std::vector<BigInt> &precisions() {
  static const std::vector<BigInt> ns{1, 10, 100, 1000, 10000, 100000,
                                      1000000};
  return ns;
}

// Random cut expression of bounded depth over random leaves.
Cut random_cut(testing::Rng &rng, int depth) {
  if (depth == 0 || testing::uniform(rng, 0, 2) == 0) {
    return testing::random_leaf(rng).cut;
  }
  Cut l = random_cut(rng, depth - 1);
  Cut r = random_cut(rng, depth - 1);
  return testing::uniform(rng, 0, 1) == 0 ? add(l, r) : mul(l, r);
}

bool criterion_1(std::string &note) {
  auto start = Clock::now();
  const BigInt n = 1000000;
  Bracket b = bracket(root_cut(2, PosRational(2)), n);
  bool ok = b.lo.num() * b.lo.num() < 2 * b.lo.den() * b.lo.den() &&
            b.hi.num() * b.hi.num() >= 2 * b.hi.den() * b.hi.den() &&
            b.width_at_most(n);

  BigInt scale = pow(BigInt(10), 8);
  BigInt m = testing::isqrt_floor(2 * scale * scale);
  ok = ok && m * m <= 2 * scale * scale &&
       2 * scale * scale < (m + 1) * (m + 1);
  // Round to nearest: compare (m + 1/2)^2 with 2 * 10^16.
  BigInt twice = 2 * m + 1;
  BigInt rounded = twice * twice > 8 * scale * scale ? m : m + 1;
  std::string want = "1." + rounded.str().substr(1) + "\n";
  Outcome cli = run_cli({"eval", "sqrt(2)", "--digits", "8"});
  double t = seconds_since(start);
  ok = ok && cli.code == 0 && cli.out == want && want == "1.41421356\n" &&
       t < 1.0;
  note = "bracket " + b.lo.str() + " .. " + b.hi.str() + ", cli " +
         std::to_string(t) + " s";
  return ok;
}

bool criterion_2(std::string &note) {
  PosRational next = next_member_above(root_cut(2, PosRational(2)),
                                       PosRational(1));
  // The mediant ray (n*a + 2)/(n*b + 1) from 1/1 at n = 3.
  PosRational ray(3 * 1 + 2, 3 * 1 + 1);
  // 5^2 = 25 < 32 = 2 * 4^2.
  bool ok = next == make(5, 4) && ray == next &&
            next.num() * next.num() < 2 * next.den() * next.den();
  note = "next = " + next.str();
  return ok;
}

bool criterion_3(std::string &note) {
  testing::Rng rng(0xacc3);
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    testing::Leaf leaf = testing::random_leaf(rng);
    for (const BigInt &n : {BigInt(1), BigInt(10), BigInt(100), BigInt(1000),
                            BigInt(10000)}) {
      Bracket b = bracket(leaf.cut, n);
      if (!leaf.member(b.lo) || leaf.member(b.hi) || !b.width_at_most(n)) {
        ++failures;
      }
    }
  }
  note = std::to_string(failures) + " failures over 1000 brackets";
  return failures == 0;
}

bool criterion_4(std::string &note) {
  testing::Rng rng(0xacc4);
  int failures = 0;
  const PosRational one(1);
  for (int i = 0; i < 100; ++i) {
    Cut a = random_cut(rng, 2);
    Cut b = random_cut(rng, 2);
    Cut c = random_cut(rng, 2);
    Real x = f_embed(a);
    if (testing::uniform(rng, 0, 1) == 1) {
      x = neg(x);
    }
    Real y = sub(f_embed(b), f_embed(c));
    Real x_inv = inv(x, 1000);
    for (const BigInt &n : precisions()) {
      bool ok =
          overlaps(bracket(add(a, b), n), bracket(add(b, a), n)) &&
          overlaps(bracket(mul(a, b), n), bracket(mul(b, a), n)) &&
          overlaps(bracket(add(add(a, b), c), n),
                   bracket(add(a, add(b, c)), n)) &&
          overlaps(bracket(mul(mul(a, b), c), n),
                   bracket(mul(a, mul(b, c)), n)) &&
          overlaps(bracket(mul(a, add(b, c)), n),
                   bracket(add(mul(a, b), mul(a, c)), n)) &&
          overlaps(bracket(mul(s_r(one), a), n), bracket(a, n)) &&
          straddles(bracket(mul(a, inverse(a)), n), one) &&
          agree(add(y, neg(y)), zero(), n) &&
          agree(mul(x, x_inv), unity(), n) &&
          agree(mul(x, add(y, x)), add(mul(x, y), mul(x, x)), n);
      failures += ok ? 0 : 1;
    }
  }
  note = std::to_string(failures) + " failures over 100 expressions";
  return failures == 0;
}

bool criterion_5(std::string &note) {
  testing::Rng rng(0xacc5);
  const BigInt n = 1000000;
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    PosRational r = testing::random_pos(rng);
    PosRational s = testing::random_pos(rng);
    SignedRational p = testing::random_signed(rng);
    SignedRational q = testing::random_signed(rng);
    Cut a = phi(r);
    Cut b = phi(s);
    bool ok =
        overlaps(bracket(phi(r + s), n), bracket(add(phi(r), phi(s)), n)) &&
        overlaps(bracket(phi(r * s), n), bracket(mul(phi(r), phi(s)), n)) &&
        agree(f_embed(add(a, b)), add(f_embed(a), f_embed(b)), n) &&
        agree(f_embed(mul(a, b)), mul(f_embed(a), f_embed(b)), n) &&
        agree(g_embed(p + q), add(g_embed(p), g_embed(q)), n) &&
        agree(g_embed(p * q), mul(g_embed(p), g_embed(q)), n);
    if (r != s) {
      PosRational lo = min(r, s);
      PosRational hi = max(r, s);
      bool phi_less = false;
      bool f_less = false;
      for (const BigInt &m : precisions()) {
        CutOrder c = compare(phi(lo), phi(hi), m);
        CutOrder d = less_than(f_embed(phi(lo)), f_embed(phi(hi)), m);
        ok = ok && c != CutOrder::Greater && d != CutOrder::Greater;
        phi_less |= c == CutOrder::Less;
        f_less |= d == CutOrder::Less;
      }
      ok = ok && phi_less && f_less;
    }
    failures += ok ? 0 : 1;
  }
  note = std::to_string(failures) + " failures over 100 inputs";
  return failures == 0;
}

bool criterion_6(std::string &note) {
  testing::Rng rng(0xacc6);
  int failures = 0;
  int trials = 0;
  while (trials < 100) {
    PosRational r = testing::random_pos(rng);
    PosRational s = testing::random_pos(rng);
    if (r == s) {
      continue;
    }
    ++trials;
    Cut a = s_r(r);
    Cut b = s_r(s);
    Cut c = testing::random_leaf(rng).cut;
    CutOrder want = r < s ? CutOrder::Less : CutOrder::Greater;
    bool separated = false;
    bool reversed = false;
    bool grew = false;
    for (const BigInt &n : precisions()) {
      CutOrder got = compare(add(a, c), add(b, c), n);
      separated |= got == want;
      reversed |= got != want && got != CutOrder::Overlap;
      grew |= bracket(add(a, c), n).lo > bracket(a, n).hi;
    }
    failures += separated && !reversed && grew ? 0 : 1;
  }
  note = std::to_string(failures) + " failures over 100 triples";
  return failures == 0;
}

bool criterion_7(std::string &note) {
  testing::Rng rng(0xacc7);
  const BigInt n = 1000000;
  int failures = 0;
  int trials = 0;
  while (trials < 100) {
    PosRational r = testing::random_pos(rng);
    PosRational s = testing::random_pos(rng);
    if (r == s) {
      continue;
    }
    ++trials;
    Cut a = s_r(min(r, s));
    Cut b = s_r(max(r, s));
    failures += overlaps(bracket(add(a, difference(a, b)), n), bracket(b, n))
                    ? 0
                    : 1;
  }
  auto start = Clock::now();
  int raised = 0;
  Cut a = root_cut(2, PosRational(3));
  for (const BigInt &budget : {BigInt(16), kDefaultBudget}) {
    try {
      bracket(difference(a, a, budget), 1000);
    } catch (const PrecisionBudgetExhausted &) {
      ++raised;
    }
  }
  try {
    bracket(difference(s_r(PosRational(2)), s_r(PosRational(2))), 10);
  } catch (const PrecisionBudgetExhausted &) {
    ++raised;
  }
  note = std::to_string(failures) + " failures over 100 pairs, " +
         std::to_string(raised) + "/3 exhausted in " +
         std::to_string(seconds_since(start)) + " s";
  return failures == 0 && raised == 3;
}

bool criterion_8(std::string &note) {
  Outcome cmp = run_cli(
      {"compare", "sqrt(2)*sqrt(2)", "2", "--precision", "1/1000000"});
  Real root2 = f_embed(root_cut(2, PosRational(2)));
  Real x = sub(mul(root2, root2), g_embed(SignedRational::from_integers(2, 1)));
  bool undecided = true;
  for (BigInt n = 1; n <= BigInt(1000000000000LL); n *= 10) {
    undecided = undecided && sign(x, n).sign == Sign::IndistinguishableFromZero;
  }
  Outcome div = run_cli({"eval", "1/(sqrt(2)*sqrt(2) - 2)"});
  note = "compare -> " + cmp.out.substr(0, cmp.out.find('\n')) +
         ", division exit " + std::to_string(div.code);
  return cmp.code == 0 && cmp.out == "overlap\n" && undecided &&
         div.code == 3 && div.out.empty();
}

bool criterion_9(std::string &note) {
  Cut s2 = s_r(PosRational(2));
  Cut sup = sup_finite({s_r(PosRational(1)), s_r(make(3, 2)), s2});
  bool ok = true;
  for (const BigInt &n : precisions()) {
    ok = ok && straddles(bracket(sup, n), PosRational(2)) &&
         compare(sup, s2, n) == CutOrder::Overlap;
  }
  note = to_sexpr(sup);
  return ok;
}

bool criterion_10(std::string &note) {
  std::ifstream in(REALS_CORPUS_PATH);
  if (!in) {
    note = "corpus missing";
    return false;
  }
  nlohmann::json corpus = nlohmann::json::parse(in);
  auto start = Clock::now();
  int failures = 0;
  for (const auto &entry : corpus) {
    Outcome got = run_cli(entry.at("args").get<std::vector<std::string>>());
    if (got.out != entry.at("stdout").get<std::string>() ||
        got.code != entry.at("exit").get<int>()) {
      ++failures;
      std::cerr << "  mismatch: " << entry.at("args").dump() << " -> "
                << got.out << " (exit " << got.code << ")\n";
    }
  }
  double t = seconds_since(start);
  note = std::to_string(corpus.size()) + " cases, " +
         std::to_string(failures) + " mismatches, " + std::to_string(t) + " s";
  return corpus.size() >= 25 && failures == 0 && t < 5.0;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool(std::string &)>>>
      criteria{
          {"sqrt(2) certification", criterion_1},
          {"mediant step from 1", criterion_2},
          {"leaf bracket contract", criterion_3},
          {"ring and field identities", criterion_4},
          {"embedding homomorphisms", criterion_5},
          {"cancellation and strict growth", criterion_6},
          {"difference law", criterion_7},
          {"undecidable zero is reported honestly", criterion_8},
          {"finite supremum", criterion_9},
          {"cli golden corpus", criterion_10},
      };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string note;
    bool ok = false;
    try {
      ok = criteria[i].second(note);
    } catch (const std::exception &e) {
      note = std::string("exception: ") + e.what();
    }
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". "
              << criteria[i].first << "  (" << note << ")" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
