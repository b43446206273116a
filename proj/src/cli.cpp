#include "ladder/cli.hpp"

#include <algorithm>
#include <iostream>

#include <CLI11.hpp>

#include "ladder/diffops.hpp"
#include "ladder/errors.hpp"
#include "ladder/group.hpp"
#include "ladder/inversion.hpp"
#include "ladder/operators.hpp"
#include "ladder/pretty.hpp"
#include "ladder/serialize.hpp"
#include "ladder/transform.hpp"

namespace ladder {

namespace {

struct CommonOpts {
  std::string input;
  std::string input2;
  std::string output = "-";
  std::string group_path;
  int p = 0, q = 0, n = 0;
  bool p_set = false, q_set = false, n_set = false;
  // Accepted on every subcommand so scripted pipelines can pass one flag
  // set to exact and numeric tools alike; the exact subcommands have no
  // randomness or tolerance to consume, so they ignore them.
  std::uint64_t seed = 12345;
  long mc_budget = 4000000;
  double tolerance = 1e-8;
};

void check_override(bool set, int want, int got, const char* what) {
  if (set && want != got)
    throw validation_error(std::string("input has ") + what + " = " + std::to_string(got) +
                           ", but " + std::to_string(want) + " was requested");
}

int cmd_transform(const CommonOpts& o) {
  FockPoly f = fock_from_json(load_json(o.input));
  check_override(o.p_set, o.p, f.p, "p");
  check_override(o.q_set, o.q, f.q, "q");
  DiskSection s;
  try {
    s = phi(f);
  } catch (const std::invalid_argument& e) {
    throw validation_error(e.what());
  }
  check_override(o.n_set, o.n, s.n, "grade");
  save_json(o.output, section_to_json(s));
  return 0;
}

int cmd_invert(const CommonOpts& o) {
  DiskSection s = section_from_json(load_json(o.input));
  check_override(o.p_set, o.p, s.p, "p");
  check_override(o.q_set, o.q, s.q, "q");
  check_override(o.n_set, o.n, s.n, "n");
  if (s.p != 1) throw unsupported_error("inversion is implemented for p = 1 only");
  if (s.n < 0) throw unsupported_error("negative weight carries no sections to invert");
  FockPoly f;
  try {
    f = invert(s);
  } catch (const std::invalid_argument& e) {
    throw validation_error(e.what());
  }
  save_json(o.output, fock_to_json(f));
  return 0;
}

int cmd_pair(const CommonOpts& o) {
  DiskSection a = section_from_json(load_json(o.input));
  DiskSection b = section_from_json(load_json(o.input2));
  if (a.p != 1 || b.p != 1) throw unsupported_error("pairing is implemented for p = 1 only");
  ExactComplex value;
  try {
    value = pairing(a, b);
  } catch (const std::invalid_argument& e) {
    throw validation_error(e.what());
  }
  std::cout << exact_to_string(value) << "\n";
  return 0;
}

int cmd_check_minors(const CommonOpts& o) {
  DiskSection s = section_from_json(load_json(o.input));
  check_override(o.p_set, o.p, s.p, "p");
  check_override(o.q_set, o.q, s.q, "q");
  bool all_zero = true;
  for (const MinorSpec& m : all_minors(s.p, s.q)) {
    bool zero = section_is_zero(apply_minor(s, m));
    all_zero = all_zero && zero;
    std::cout << "minor rows(" << m.r1 << "," << m.r2 << ") cols(" << m.c1 << "," << m.c2
              << "): " << (zero ? "annihilated" : "nonzero") << "\n";
  }
  if (s.q < 2) std::cout << "(no minors exist for q = " << s.q << ")\n";
  std::cout << "all minors annihilate: " << (all_zero ? "yes" : "no") << "\n";
  return all_zero ? 0 : 2;
}

int cmd_act(const CommonOpts& o) {
  GroupElementX g = group_from_json(load_json(o.group_path));
  FockPoly f = fock_from_json(load_json(o.input));
  if (f.p != g.p || f.q != g.q)
    throw validation_error("group element and polynomial signatures differ");
  if (!check_group(g))
    throw validation_error("matrix does not satisfy the indefinite unitarity relation");
  if (!is_compact_diag(g))
    throw unsupported_error(
        "exact action is implemented for block-diagonal unitary elements only");
  save_json(o.output, fock_to_json(sigma_compact(g, f)));
  return 0;
}

int cmd_demo() {
  // Worked weight-2 example over the q = 3 ball: the cubic-by-quintic
  // monomial whose transform, isolation, normalization, pairing and
  // round trip are all small enough to read.
  const int q = 3, n = 2;
  MultiIndex nu{1, 3, 1};
  FockPoly f = ball_monomial(q, nu, n);
  std::cout << "input          f = " << pretty_fock(f) << "\n";

  DiskSection tf = phi(f);
  std::cout << "transform      Tf = " << pretty_section(tf) << "\n";

  DiskSection expected = section_zero(1, q, n);
  section_add_term(expected, {0, 1, 1}, MatrixIndex::from_row({1, 2, 0}), ExactComplex(18));
  section_add_term(expected, {0, 2, 0}, MatrixIndex::from_row({1, 1, 1}), ExactComplex(36));
  section_add_term(expected, {1, 0, 1}, MatrixIndex::from_row({0, 3, 0}), ExactComplex(6));
  section_add_term(expected, {1, 1, 0}, MatrixIndex::from_row({0, 2, 1}), ExactComplex(18));

  DiskSection pf = p_op(tf);
  std::cout << "highest part   P(Tf) = " << pretty_section(pf) << "\n";
  DiskSection expected_p = section_zero(1, q, n);
  section_add_term(expected_p, {1, 1, 0}, MatrixIndex::from_row({0, 2, 1}), ExactComplex(18));

  DiskSection lf = l_op(tf);
  std::cout << "normalized     L(Tf) = " << pretty_section(lf) << "\n";
  DiskSection expected_l = section_zero(1, q, n);
  section_add_term(expected_l, {1, 1, 0}, MatrixIndex::from_row({0, 2, 1}), ExactComplex(6));

  ExactComplex pair_value = pairing(tf, tf);
  std::cout << "pairing        ((Tf, Tf)) = " << exact_to_string(pair_value) << "\n";

  FockPoly back = invert(tf);
  bool round_trip = back == f;
  std::cout << "round trip     invert(Tf) = f: " << (round_trip ? "ok" : "MISMATCH") << "\n";

  bool annihilated = true;
  for (const MinorSpec& m : all_minors(1, q))
    annihilated = annihilated && section_is_zero(apply_minor(tf, m));
  std::cout << "annihilation   all minors vanish on Tf: " << (annihilated ? "ok" : "MISMATCH")
            << "\n";

  bool ok = true;
  auto expect = [&ok](bool cond, const char* what) {
    if (!cond) {
      std::cout << "FAIL: " << what << "\n";
      ok = false;
    }
  };
  expect(tf == expected, "transform value");
  expect(pf == expected_p, "highest part");
  expect(lf == expected_l, "normalized part");
  expect(pair_value == ExactComplex(36), "pairing value");
  expect(round_trip, "round trip");
  expect(annihilated, "minor annihilation");
  std::cout << (ok ? "demo: all checks passed" : "demo: CHECKS FAILED") << "\n";
  return ok ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{
      "Exact transform engine between Gaussian-rational polynomials and "
      "polynomial-coefficient sections over the matrix unit ball"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOpts o;
  app.add_option("--seed", o.seed, "RNG seed for numeric cross checks");
  app.add_option("--mc-budget", o.mc_budget, "sample budget for numeric cross checks");
  app.add_option("--tolerance", o.tolerance, "tolerance for numeric cross checks");

  auto add_shape = [&](CLI::App* c) {
    c->add_option("--p", o.p, "expected number of holomorphic slots")
        ->check(CLI::PositiveNumber)
        ->trigger_on_parse()
        ->each([&](const std::string&) { o.p_set = true; });
    c->add_option("--q", o.q, "expected number of conjugated slots")
        ->check(CLI::PositiveNumber)
        ->trigger_on_parse()
        ->each([&](const std::string&) { o.q_set = true; });
    c->add_option("--n", o.n, "expected weight/grade")->trigger_on_parse()->each(
        [&](const std::string&) { o.n_set = true; });
  };

  int code = 0;

  CLI::App* t = app.add_subcommand("transform", "apply the weight-n transform to a polynomial");
  t->add_option("--input", o.input, "polynomial JSON (\"-\" for stdin)")->required();
  t->add_option("--output", o.output, "section JSON destination (\"-\" for stdout)");
  add_shape(t);
  t->callback([&] { code = cmd_transform(o); });

  CLI::App* inv = app.add_subcommand("invert", "recover the polynomial from a section (p = 1)");
  inv->add_option("--input", o.input, "section JSON (\"-\" for stdin)")->required();
  inv->add_option("--output", o.output, "polynomial JSON destination (\"-\" for stdout)");
  add_shape(inv);
  inv->callback([&] { code = cmd_invert(o); });

  CLI::App* pr = app.add_subcommand("pair", "sesquilinear pairing of two sections (p = 1)");
  pr->add_option("--input", o.input, "first section JSON")->required();
  pr->add_option("--input2", o.input2, "second section JSON")->required();
  pr->callback([&] { code = cmd_pair(o); });

  CLI::App* cm = app.add_subcommand("check-minors",
                                    "test whether every 2x2 operator minor annihilates a section");
  cm->add_option("--input", o.input, "section JSON")->required();
  add_shape(cm);
  cm->callback([&] { code = cmd_check_minors(o); });

  CLI::App* act = app.add_subcommand(
      "act", "apply a block-diagonal unitary group element to a polynomial");
  act->add_option("--group", o.group_path, "group element JSON")->required();
  act->add_option("--input", o.input, "polynomial JSON")->required();
  act->add_option("--output", o.output, "polynomial JSON destination");
  act->callback([&] { code = cmd_act(o); });

  CLI::App* demo = app.add_subcommand("demo", "run the worked weight-2 example end to end");
  demo->callback([&] { code = cmd_demo(); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const unsupported_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return code;
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args);
}

}  // namespace ladder
