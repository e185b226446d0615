// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "expect.hpp"
#include "mutations.hpp"
#include "random_domain.hpp"
#include "support.hpp"
#include "tx_catalog.hpp"
#include "tsal/legality.hpp"
#include "tsal/novelty.hpp"
#include "tsal/reader.hpp"
#include "tsal/scengen.hpp"
#include "tsal/transform.hpp"

using namespace tsal;
using Clock = std::chrono::steady_clock;

namespace
{
  // Collects the first few reasons a criterion failed.
  class Check
  {
  public:
    void require(bool ok, const std::string& why)
    {
      if (ok)
        return;
      ++failures_;
      if (failures_ <= 5)
        reasons_.push_back(why);
    }
    bool ok() const { return failures_ == 0; }
    std::string summary() const
    {
      std::string s;
      for (const auto& r : reasons_)
        s += (s.empty() ? "" : "; ") + r;
      if (failures_ > 5)
        s += "; (" + std::to_string(failures_ - 5) + " more)";
      return s;
    }

  private:
    int failures_ = 0;
    std::vector<std::string> reasons_;
  };

  struct Criterion
  {
    int id;
    std::string name;
    double budget_s;  // 0: untimed
    std::function<void(Check&)> body;
  };

  std::string first_diag(const Diagnostics& ds)
  {
    if (ds.empty())
      return "";
    std::ostringstream os;
    os << ds.front();
    return os.str();
  }

  // ------------------------------------------------------------- 1

  void corpus(Check& c)
  {
    for (const char* f : {"cartpole/cartpole.tsal", "cartpole/cartpole.tsg"})
    {
      std::string text = tsal::test::read_fixture(f);
      bool is_domain = std::string(f).ends_with(".tsal");
      auto once = [&](const std::string& t) -> std::pair<std::string, std::size_t> {
        if (is_domain)
        {
          auto p = parse_domain(t, f);
          return {p.value ? print_domain(*p.value) : "", p.diagnostics.size()};
        }
        auto p = parse_scenario_generator(t, f);
        return {p.value ? print_scenario_generator(*p.value) : "", p.diagnostics.size()};
      };
      auto [p1, n1] = once(text);
      c.require(n1 == 0, std::string(f) + ": " + std::to_string(n1) + " diagnostics");
      auto [p2, n2] = once(p1);
      c.require(n2 == 0 && !p2.empty(), std::string(f) + ": reprint does not parse");
      c.require(p1 == p2, std::string(f) + ": print(parse(print(parse(x)))) differs");
    }
  }

  // ------------------------------------------------------------- 2

  void legality(Check& c)
  {
    auto env = tsal::test::cartpole();
    auto r = check_domain(env.domain);
    c.require(r.legal() && r.diagnostics.empty(), "reference domain rejected: " + first_diag(r.diagnostics));
    const auto& muts = tsal::test::mutation_catalog();
    c.require(muts.size() >= 10, "fewer than 10 mutations");
    for (const auto& m : muts)
    {
      auto mr = tsal::test::check_mutation(m);
      auto codes = error_codes(mr.diagnostics);
      std::set<std::string> unique(codes.begin(), codes.end());
      c.require(unique == std::set<std::string>{m.code}, m.name + ": got " + first_diag(mr.diagnostics));
    }
  }

  // ------------------------------------------------------------- 3

  void transformations(Check& c)
  {
    auto base = tsal::test::cartpole();
    std::set<TxKind> kinds;
    for (const auto& s : tsal::test::tx_catalog())
    {
      auto p = parse_transformation_script(s.text);
      if (!p.ok() || p.value->size() != 1)
      {
        c.require(false, "does not parse: " + s.text);
        continue;
      }
      const Transformation& t = p.value->front();
      kinds.insert(t.kind);
      auto back = parse_transformation_script(to_string(t));
      c.require(back.ok() && back.value->size() == 1 && back.value->front() == t, "round trip: " + s.text);
      try
      {
        c.require(!(apply(t, base) == base), "apply changed nothing: " + s.text);
      }
      catch (const std::exception& e)
      {
        c.require(false, "apply threw on " + s.text + ": " + e.what());
      }
    }
    c.require(kinds.size() == tx_kind_count, std::to_string(kinds.size()) + " distinct heads");

    tsal::test::DomainGen gen(20240917);
    for (int i = 0; i < 1000; ++i)
    {
      Environment env{gen.domain(), ScenarioGenerator{}};
      auto [add, remove] = gen.add_remove(env.domain);
      c.require(apply(remove, apply(add, env)) == env, "inverse fails for " + to_string(add));
    }
    c.require(apply_sequence({}, base.domain, base.sg) == base, "empty sequence is not identity");
  }

  // ------------------------------------------------------------- 4

  void novelty(Check& c)
  {
    auto env = tsal::test::cartpole();
    std::set<NoveltyLevel> covered;
    for (const auto& stem : tsal::test::novelty_fixtures())
    {
      auto e = tsal::test::load_expectation(stem);
      if (!e.level)
      {
        c.require(false, stem + ": no stored level");
        continue;
      }
      covered.insert(*e.level);
      auto v = classify(tsal::test::load_script(e.script), env.domain, env.sg, e.pov);
      const auto& lv = v[*e.level];
      c.require(lv.holds && !lv.elements.empty(), stem + ": own level false or without witness");
      c.require(lv == e.verdict, stem + ": verdict differs from stored");
    }
    c.require(covered.size() == novelty_level_count, std::to_string(covered.size()) + " levels covered");

    auto e = tsal::test::load_expectation("empty");
    auto v = classify(tsal::test::load_script(e.script), env.domain, env.sg, e.pov);
    c.require(!e.level && v == NoveltyVerdict{}, "empty sequence is not all-false");
  }

  // ------------------------------------------------------------- 5

  void mudworld(Check& c)
  {
    auto env = tsal::test::mudworld();
    for (std::uint64_t seed = 0; seed < 100; ++seed)
    {
      State st;
      try
      {
        st = sample_state(env.domain, env.sg, seed);
      }
      catch (const std::exception& e)
      {
        c.require(false, "seed " + std::to_string(seed) + ": " + e.what());
        continue;
      }
      int rovers = 0, muddy = 0;
      for (const auto& [key, val] : st.assignments)
      {
        if (key.function == Symbol("MUDDY"))
          ++muddy;
        if (key.function != Symbol("ROBOT-DEST"))
          continue;
        ++rovers;
        auto r = key.args.at(0);
        auto x1 = st.value_of(Symbol("ROBOT-X-LOC"), {r})->as_number();
        auto y1 = st.value_of(Symbol("ROBOT-Y-LOC"), {r})->as_number();
        double dist = std::abs(x1 - key.args.at(1).as_number()) + std::abs(y1 - key.args.at(2).as_number());
        c.require(dist < 4, "seed " + std::to_string(seed) + ": distance " + std::to_string(dist));
      }
      c.require(rovers == 6, "seed " + std::to_string(seed) + ": " + std::to_string(rovers) + " rovers");
      c.require(muddy == 36, "seed " + std::to_string(seed) + ": " + std::to_string(muddy) + " MUDDY fluents");
    }

    RandomStream rng(2024);
    GeneratorExpr g{Bernoulli{0.3}};
    int hits = 0;
    for (int i = 0; i < 10000; ++i)
      if (std::get<Value>(draw_values(env.domain, env.sg, g, State{}, rng).at(0)) == Value{true})
        ++hits;
    double freq = hits / 10000.0;
    c.require(std::abs(freq - 0.3) <= 0.02, "Bernoulli frequency " + std::to_string(freq));

    auto a = print_state(sample_state(env.domain, env.sg, 42));
    auto b = print_state(sample_state(env.domain, env.sg, 42));
    c.require(a == b, "seed 42 is not deterministic");
  }

  // ------------------------------------------------------------- 6

  void performance(Check& c)
  {
    auto env = tsal::test::cartpole();
    State st = tsal::test::must(parse_state(tsal::test::read_fixture("cartpole/def13.tst")), "def13");
    double p = evaluate_performance(*env.sg.performance, st, Symbol("AGENT1"), env.domain);
    c.require(std::abs(p - (-0.01)) <= 1e-12, "performance " + std::to_string(p));
    auto sum = tsal::test::must(parse_calculation("(SUM ?X (WINS ?X) 7)"), "sum");
    auto prod = tsal::test::must(parse_calculation("(PRODUCT ?X (WINS ?X) 7)"), "product");
    c.require(evaluate_performance(sum, st, Symbol("AGENT1"), env.domain) == 0.0, "empty SUM is not 0");
    c.require(evaluate_performance(prod, st, Symbol("AGENT1"), env.domain) == 1.0, "empty PRODUCT is not 1");
  }

  // ------------------------------------------------------------- 7

  // Raw bytes, plus shuffled corpus tokens and byte-flipped corpus text so
  // the parsers get past their first token often enough to matter.
  class Fuzzer
  {
  public:
    explicit Fuzzer(std::uint64_t seed, std::string corpus) : rng_(seed), corpus_(std::move(corpus))
    {
      std::string tok;
      for (char ch : corpus_)
      {
        if (ch == '(' || ch == ')' || std::isspace(static_cast<unsigned char>(ch)))
        {
          if (!tok.empty())
            tokens_.push_back(tok);
          tok.clear();
          if (ch != ' ' && ch != '\n')
            tokens_.emplace_back(1, ch);
        }
        else
          tok += ch;
      }
      tokens_.push_back("(");
      tokens_.push_back(")");
    }

    std::string bytes()
    {
      std::string s;
      for (int i = 0, n = pick(0, 256); i < n; ++i)
        s += static_cast<char>(pick(0, 255));
      return s;
    }

    std::string structured()
    {
      std::string s;
      switch (pick(1, 2))
      {
      case 1:
        for (int i = 0, n = pick(1, 120); i < n; ++i)
          s += tokens_[pick(0, static_cast<int>(tokens_.size()) - 1)] + " ";
        break;
      default:
        s = corpus_;
        for (int i = 0, n = pick(1, 8); i < n; ++i)
        {
          std::size_t at = pick(0, static_cast<int>(s.size()) - 1);
          switch (pick(0, 2))
          {
          case 0:
            s[at] = static_cast<char>(pick(0, 255));
            break;
          case 1:
            s.erase(at, pick(1, 40));
            break;
          default:
            s.insert(at, tokens_[pick(0, static_cast<int>(tokens_.size()) - 1)]);
          }
        }
      }
      return s;
    }

  private:
    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    std::mt19937_64 rng_;
    std::string corpus_;
    std::vector<std::string> tokens_;
  };

  void fuzz(Check& c)
  {
    using Parser = std::function<bool(const std::string&)>;
    auto ok = [](const auto& p) { return p.ok() || !p.diagnostics.empty(); };
    std::vector<std::tuple<std::string, std::string, Parser>> parsers = {
      {"domain", "cartpole/cartpole.tsal", [&](const std::string& s) { return ok(parse_domain(s)); }},
      {"generator", "mudworld/mudworld.tsg", [&](const std::string& s) { return ok(parse_scenario_generator(s)); }},
      {"script", "novelty/level8.tx", [&](const std::string& s) { return ok(parse_transformation_script(s)); }},
      {"state", "cartpole/def13.tst", [&](const std::string& s) { return ok(parse_state(s)); }},
      {"term", "cartpole/cartpole.tsal", [&](const std::string& s) { return ok(parse_term(s)); }},
      {"calculation", "cartpole/cartpole.tsg", [&](const std::string& s) { return ok(parse_calculation(s)); }},
      {"condition", "cartpole/cartpole.tsal", [&](const std::string& s) { return ok(parse_condition(s)); }},
      {"effect", "cartpole/cartpole.tsal", [&](const std::string& s) { return ok(parse_effect(s)); }},
      {"change", "cartpole/cartpole.tsal", [&](const std::string& s) { return ok(parse_change(s)); }},
      {"function", "cartpole/cartpole.tsal", [&](const std::string& s) { return ok(parse_function_decl(s)); }},
      {"generator-expr", "mudworld/mudworld.tsg", [&](const std::string& s) { return ok(parse_generator(s)); }},
    };
    std::uint64_t seed = 1;
    for (const auto& [name, fixture, parse] : parsers)
    {
      Fuzzer fz(seed++, tsal::test::read_fixture(fixture));
      int thrown = 0, silent = 0;
      std::string what;
      for (int i = 0; i < 20000; ++i)
      {
        std::string input = i < 10000 ? fz.bytes() : fz.structured();
        try
        {
          if (!parse(input))
            ++silent;
        }
        catch (const std::exception& e)
        {
          if (thrown++ == 0)
            what = e.what();
        }
        catch (...)
        {
          ++thrown;
        }
      }
      c.require(thrown == 0, name + ": " + std::to_string(thrown) + " inputs threw, first: " + what);
      c.require(silent == 0, name + ": " + std::to_string(silent) + " failures without diagnostics");
    }
  }
}

int main()
{
  std::vector<Criterion> criteria = {
    {1, "reader: Cart-Pole corpus parses cleanly and reprints to a fixpoint", 1.0, corpus},
    {2, "legality: reference accepted, every mutation yields exactly its code", 1.0, legality},
    {3, "transform: 36 heads, add/remove inverse over 1000 cases, empty identity", 0, transformations},
    {4, "novelty: eight level fixtures and the empty script match stored verdicts", 1.0, novelty},
    {5, "scengen: Mudworld over 100 seeds, Bernoulli(0.3), determinism", 5.0, mudworld},
    {6, "performance: reference state scores -0.01, empty SUM and PRODUCT", 0, performance},
    {7, "fuzz: 10k random-byte and 10k structured inputs per parser without a crash", 30.0, fuzz},
  };

  int failed = 0;
  for (const auto& cr : criteria)
  {
    Check c;
    auto t0 = Clock::now();
    try
    {
      cr.body(c);
    }
    catch (const std::exception& e)
    {
      c.require(false, std::string("uncaught: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (cr.budget_s > 0)
      c.require(secs < cr.budget_s, "took " + std::to_string(secs) + "s, budget " + std::to_string(cr.budget_s) + "s");

    std::printf("%s %d %s (%.3fs)", c.ok() ? "PASS" : "FAIL", cr.id, cr.name.c_str(), secs);
    if (!c.ok())
      std::printf(": %s", c.summary().c_str());
    std::printf("\n");
    failed += c.ok() ? 0 : 1;
  }
  return failed;
}
