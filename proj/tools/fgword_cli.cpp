// Command-line front end: word arithmetic, Whitehead equivalence, covering
// rewrites, point pushes and the bundled claim verification.
//
// Exit codes: 0 success, 1 verification or computation failure, 2 usage
// errors (including word syntax errors).

#include <CLI11.hpp>

#include <fgword/verify.hpp>

#include <iostream>
#include <random>

using namespace fg;

namespace {

struct GlobalOptions {
  std::string alphabet_csv = "a,b,c";
  std::string fixture_dir;  // empty: use the built-in tables
  bool json_output = false;
  unsigned threads = 1;
  uint64_t seed = 1;
  size_t budget = 5000000;

  AlphabetRef alphabet() const { return alphabet_from_csv(alphabet_csv); }
  OrbitOptions orbit_options() const {
    return OrbitOptions{budget, OrbitStrategy::TwoPhase, threads};
  }
  Fixtures fixtures() const {
    return fixture_dir.empty() ? builtin_fixtures() : load_fixtures(fixture_dir);
  }
};

void emit(const GlobalOptions& opts, const json& machine, const std::string& text) {
  if (opts.json_output)
    std::cout << machine.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

std::string witness_lines(const std::vector<WhiteheadMove>& witness) {
  std::string out;
  for (const auto& m : witness) out += "  " + m.describe() + "\n";
  return out;
}

int cmd_reduce(const GlobalOptions& opts, const std::string& text) {
  Word w = parse_word(text, opts.alphabet());
  emit(opts, json{{"schema", 1}, {"word", format_word(w)}}, format_word(w));
  return 0;
}

int cmd_minimize(const GlobalOptions& opts, const std::string& text) {
  Word w = parse_word(text, opts.alphabet());
  auto r = minimize(w);
  json j{{"schema", 1},
         {"minimal", format_word(r.minimal)},
         {"min_length", r.minimal.length()},
         {"witness", witness_to_json(r.witness)}};
  emit(opts, j,
       "minimal: " + format_word(r.minimal) + "\nlength: " + std::to_string(r.minimal.length()) +
           "\nwitness:\n" + witness_lines(r.witness));
  return 0;
}

int cmd_orbit(const GlobalOptions& opts, const std::string& text,
              const std::vector<std::string>& contains) {
  AlphabetRef alphabet = opts.alphabet();
  Word w = parse_word(text, alphabet);
  Orbit orb = orbit(w, opts.orbit_options());
  json queried = json::array();
  std::string text_out = "min_length: " + std::to_string(orb.min_length()) +
                         "\norbit_size: " + std::to_string(orb.size());
  for (const auto& q : contains) {
    Word qw = parse_word(q, alphabet);
    bool hit = orb.contains(minimize(qw).minimal);
    queried.push_back(json{{"word", q}, {"contained", hit}});
    text_out += "\ncontains " + q + ": " + (hit ? "true" : "false");
  }
  json j{{"schema", 1},
         {"seed", format_word(w)},
         {"min_length", orb.min_length()},
         {"orbit_size", orb.size()},
         {"contains", queried}};
  emit(opts, j, text_out);
  return 0;
}

int cmd_equiv(const GlobalOptions& opts, const std::string& t1, const std::string& t2) {
  AlphabetRef alphabet = opts.alphabet();
  auto r = equivalent(parse_word(t1, alphabet), parse_word(t2, alphabet), opts.orbit_options());
  json j{{"schema", 1}, {"equivalent", r.equivalent}, {"witness", witness_to_json(r.witness)}};
  emit(opts, j,
       std::string(r.equivalent ? "true" : "false") +
           (r.equivalent ? "\nwitness:\n" + witness_lines(r.witness) : ""));
  return 0;
}

int cmd_inv_equiv(const GlobalOptions& opts, const std::string& text) {
  auto r = inverse_equivalent(parse_word(text, opts.alphabet()), opts.orbit_options());
  json j{{"schema", 1}, {"equivalent", r.equivalent}, {"witness", witness_to_json(r.witness)}};
  emit(opts, j,
       std::string(r.equivalent ? "true" : "false") +
           (r.equivalent ? "\nwitness:\n" + witness_lines(r.witness) : ""));
  return 0;
}

int cmd_primitive(const GlobalOptions& opts, const std::string& text) {
  Word w = parse_word(text, opts.alphabet());
  auto r = minimize(w);
  bool prim = r.minimal.length() == 1;
  json j{{"schema", 1},
         {"primitive", prim},
         {"minimal", format_word(r.minimal)},
         {"witness", witness_to_json(r.witness)}};
  emit(opts, j,
       std::string(prim ? "true" : "false") +
           (prim ? "\nminimal: " + format_word(r.minimal) + "\nwitness:\n" +
                       witness_lines(r.witness)
                 : ""));
  return 0;
}

int cmd_lift(const GlobalOptions& opts, const std::string& text) {
  CoverData cover = opts.fixtures().cover;
  Word w = parse_word(text, cover.ambient);
  if (!in_subgroup(w, cover)) {
    std::cerr << "error: word does not lie in the even subgroup\n";
    return 1;
  }
  Word lift = rewrite(w, cover);
  emit(opts, json{{"schema", 1}, {"lift", format_word(lift)}}, format_word(lift));
  return 0;
}

int cmd_push(const GlobalOptions& opts, const std::string& path_text, const std::string& apply_text,
             const std::string& keep_pair) {
  Fixtures f = opts.fixtures();
  PushPath path = parse_path(path_text);
  GenMap m = push_along(path, f.pushes);
  Word w = parse_word(apply_text, f.pushes.alphabet);
  Word image = apply(m, w);
  if (keep_pair.empty()) {
    emit(opts, json{{"schema", 1}, {"image", format_word(image)}}, format_word(image));
    return 0;
  }
  auto comma = keep_pair.find(',');
  if (comma == std::string::npos) throw Error("--keep expects two point names, e.g. p1,p2");
  const KeepMap& k = f.keeps.keep_of(keep_pair.substr(0, comma), keep_pair.substr(comma + 1));
  Word kept_image = apply(k.map, image), kept_word = apply(k.map, w);
  json j{{"schema", 1},
         {"image", format_word(kept_image)},
         {"original", format_word(kept_word)},
         {"moved", !conjugate_equal(kept_image, kept_word)}};
  emit(opts, j,
       format_word(kept_image) +
           (conjugate_equal(kept_image, kept_word) ? "\n(same class as the original)"
                                                   : "\n(class differs from the original)"));
  return 0;
}

int cmd_verify(const GlobalOptions& opts, const std::string& json_path) {
  Fixtures fixtures = opts.fixtures();
  Report report = verify_all(fixtures, VerifyOptions{opts.budget, opts.threads});
  for (const auto& c : report.claims)
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << ": " << c.anchor << "\n";
  std::cout << (report.all_pass() ? "all claims verified" : "some claims FAILED") << " in "
            << report.seconds << "s\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << report.to_json().dump(2) << "\n";
  }
  if (opts.json_output && json_path.empty()) std::cout << report.to_json().dump(2) << "\n";
  return report.all_pass() ? 0 : 1;
}

int cmd_fixtures(const GlobalOptions&, const std::string& dump_dir,
                 const std::string& validate_dir) {
  if (!dump_dir.empty()) {
    Fixtures f = builtin_fixtures();
    auto write = [&](const std::string& name, const json& j) {
      std::ofstream out(dump_dir + "/" + name);
      if (!out) throw Error("cannot write " + dump_dir + "/" + name);
      out << j.dump(2) << "\n";
    };
    write("klein_cover.json", cover_to_json(f.cover));
    write("push_tables.json", push_table_to_json(f.pushes));
    write("keep_maps.json", keep_table_to_json(f.keeps));
    std::cout << "wrote klein_cover.json, push_tables.json, keep_maps.json to " << dump_dir
              << "\n";
  }
  if (!validate_dir.empty()) {
    load_fixtures(validate_dir);
    std::cout << "fixtures in " << validate_dir << " validate\n";
  }
  return 0;
}

int cmd_selftest(const GlobalOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  AlphabetRef f3 = opts.alphabet();
  auto random_word = [&](size_t max_len) {
    std::vector<Letter> ls;
    size_t len = rng() % (max_len + 1);
    while (ls.size() < len) {
      Letter l = Letter::make(rng() % f3->rank(), rng() % 2 ? +1 : -1);
      if (!ls.empty() && ls.back() == l.inverse()) continue;
      ls.push_back(l);
    }
    return Word(f3, ls);
  };
  size_t checks = 0;
  auto expect = [&](bool ok, const char* what) {
    ++checks;
    if (!ok) throw Error(std::string("selftest failed: ") + what);
  };
  for (int i = 0; i < 200; ++i) {
    Word a = random_word(10), b = random_word(10), c = random_word(10);
    expect(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)), "associativity");
    expect(multiply(a, invert(a)).empty(), "inverses");
    expect(parse_word(format_word(a), f3) == a, "grammar round trip");
    expect(conjugate_equal(a, conjugate(b, a)), "conjugacy");
  }
  CoverData cover = klein_cover();
  for (int i = 0; i < 100; ++i) {
    std::vector<Letter> ls;
    const size_t target = 2 * (rng() % 10);
    while (ls.size() < target) {
      Letter l = Letter::make(rng() % 2, rng() % 2 ? +1 : -1);
      if (!ls.empty() && ls.back() == l.inverse()) continue;
      ls.push_back(l);
    }
    Word u(cover.ambient, ls);
    expect(embed(rewrite(u, cover), cover) == u, "cover round trip");
  }
  for (int i = 0; i < 20; ++i) {
    Word u = random_word(5);
    auto moves = enumerate_type_ii(f3);
    GenMap sigma = moves[rng() % moves.size()].map;
    expect(equivalent(u, apply(sigma, u), opts.orbit_options()).equivalent, "equivalence");
  }
  std::cout << checks << " checks passed (seed " << opts.seed << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free group words: Whitehead equivalence, covering rewrites, point pushes"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions opts;
  app.add_option("--alphabet", opts.alphabet_csv, "generator names, e.g. a,b,c")
      ->capture_default_str();
  app.add_option("--fixtures", opts.fixture_dir,
                 "fixture directory (default: built-in tables)");
  app.add_flag("--json", opts.json_output, "machine-readable output");
  app.add_option("--threads", opts.threads, "worker thread cap")->capture_default_str();
  app.add_option("--seed", opts.seed, "seed for the selftest subcommand")
      ->capture_default_str();
  app.add_option("--budget", opts.budget, "orbit member cap")->capture_default_str();

  std::function<int()> action;

  std::string arg1, arg2, apply_text, keep_pair, json_path, dump_dir, validate_dir;
  std::vector<std::string> contains;

  auto* reduce = app.add_subcommand("reduce", "freely reduce a word");
  reduce->add_option("word", arg1)->required();
  reduce->callback([&] { action = [&] { return cmd_reduce(opts, arg1); }; });

  auto* minimize_cmd = app.add_subcommand("minimize", "minimal cyclic form with witness");
  minimize_cmd->add_option("word", arg1)->required();
  minimize_cmd->callback([&] { action = [&] { return cmd_minimize(opts, arg1); }; });

  auto* orbit_cmd = app.add_subcommand("orbit", "enumerate the minimal orbit");
  orbit_cmd->add_option("word", arg1)->required();
  orbit_cmd->add_option("--contains", contains, "words to test for membership");
  orbit_cmd->callback([&] { action = [&] { return cmd_orbit(opts, arg1, contains); }; });

  auto* equiv = app.add_subcommand("equiv", "decide automorphism equivalence");
  equiv->add_option("word1", arg1)->required();
  equiv->add_option("word2", arg2)->required();
  equiv->callback([&] { action = [&] { return cmd_equiv(opts, arg1, arg2); }; });

  auto* inv_equiv = app.add_subcommand("inv-equiv", "equivalence with the inverse");
  inv_equiv->add_option("word", arg1)->required();
  inv_equiv->callback([&] { action = [&] { return cmd_inv_equiv(opts, arg1); }; });

  auto* primitive = app.add_subcommand("primitive", "test for primitivity");
  primitive->add_option("word", arg1)->required();
  primitive->callback([&] { action = [&] { return cmd_primitive(opts, arg1); }; });

  auto* lift = app.add_subcommand("lift", "rewrite onto the even-subgroup basis");
  lift->add_option("word", arg1)->required();
  lift->callback([&] { action = [&] { return cmd_lift(opts, arg1); }; });

  auto* push = app.add_subcommand("push", "apply a composite of point pushes");
  push->add_option("path", arg1, "e.g. \"p1:b p1:a^-1 p2:c\"")->required();
  push->add_option("--apply", apply_text, "word to transform")->required();
  push->add_option("--keep", keep_pair, "forget all points but these two, e.g. p1,p2");
  push->callback([&] { action = [&] { return cmd_push(opts, arg1, apply_text, keep_pair); }; });

  auto* verify = app.add_subcommand("verify-paper", "run the bundled claim checks");
  verify->add_option("--json", json_path, "write the JSON report to this file");
  verify->callback([&] { action = [&] { return cmd_verify(opts, json_path); }; });

  auto* fixtures = app.add_subcommand("fixtures", "dump or validate fixture files");
  fixtures->add_option("--dump", dump_dir, "write the built-in tables to this directory");
  fixtures->add_option("--validate", validate_dir, "load and validate this directory");
  fixtures->callback(
      [&] { action = [&] { return cmd_fixtures(opts, dump_dir, validate_dir); }; });

  auto* selftest = app.add_subcommand("selftest", "randomized law checks");
  selftest->callback([&] { action = [&] { return cmd_selftest(opts); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
