#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tsal/legality.hpp"
#include "tsal/novelty.hpp"
#include "tsal/reader.hpp"
#include "tsal/scengen.hpp"
#include "tsal/transform.hpp"
#include "tsal/types.hpp"

namespace tsal::cli
{

  namespace
  {
    namespace fs = std::filesystem;
    using json = nlohmann::json;

    enum class Format { Text, Jsonl };

    // Carries an exit code out of nested helpers.
    struct Exit
    {
      int code;
    };

    struct Options
    {
      Format format = Format::Text;
      std::uint64_t seed = 0;
      std::string pov;
      bool check = false;
      std::string out_path;
      std::vector<std::string> files;
    };

    class Session
    {
    public:
      Session(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

      const Options& opt() const { return opt_; }
      bool jsonl() const { return opt_.format == Format::Jsonl; }

      void diagnostic(const Diagnostic& d)
      {
        if (!jsonl())
        {
          err_ << d << '\n';
          return;
        }
        json j = record("diagnostic");
        j["severity"] = d.severity == Severity::Error ? "error" : "warning";
        j["code"] = d.code;
        j["message"] = d.message;
        j["file"] = d.span.file;
        j["line"] = d.span.line;
        j["column"] = d.span.column;
        out_ << j.dump() << '\n';
      }

      void diagnostics(const Diagnostics& ds)
      {
        for (const auto& d : ds)
          diagnostic(d);
      }

      void fail(const char* code, const std::string& message, int exit)
      {
        diagnostic(Diagnostic{Severity::Error, code, message, {}});
        throw Exit{exit};
      }

      static json record(std::string_view type) { return json{{"v", jsonl_schema}, {"type", type}}; }

      void emit(const json& j) { out_ << j.dump() << '\n'; }

      // Text payload: to --out when given, else stdout.
      void payload(const std::string& text)
      {
        if (opt_.out_path.empty())
          out_ << text;
        else
          write_file(opt_.out_path, text);
      }

      std::string read_file(const std::string& path)
      {
        std::ifstream in(path, std::ios::binary);
        if (!in)
          fail(code::IoRead, "cannot read " + path, exit_code::io);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
      }

      void write_file(const std::string& path, const std::string& text)
      {
        std::ofstream o(path, std::ios::binary);
        o << text;
        if (!o)
          fail(code::IoWrite, "cannot write " + path, exit_code::io);
      }

      template <class T>
      T load(const std::string& path, Parsed<T> (*parser)(std::string_view, const std::string&))
      {
        auto text = read_file(path);
        auto p = parser(text, path);
        diagnostics(p.diagnostics);
        if (!p.ok())
          throw Exit{exit_code::diagnostics};
        return std::move(*p.value);
      }

      Domain domain(const std::string& p) { return load<Domain>(p, &parse_domain); }
      ScenarioGenerator generator(const std::string& p)
      {
        return load<ScenarioGenerator>(p, &parse_scenario_generator);
      }
      TransformationSequence script(const std::string& p)
      {
        return load<TransformationSequence>(p, &parse_transformation_script);
      }

    private:
      const Options& opt_;
      std::ostream& out_;
      std::ostream& err_;
    };

    void expect_files(Session& s, std::size_t n, const char* usage)
    {
      if (s.opt().files.size() != n)
        s.fail(code::Usage, std::string("expected ") + usage, exit_code::usage);
    }

    int cmd_parse(Session& s)
    {
      std::string canonical;
      for (const auto& path : s.opt().files)
      {
        auto ext = fs::path(path).extension().string();
        std::string text;
        if (ext == ".tsal")
          text = print_domain(s.domain(path));
        else if (ext == ".tsg")
          text = print_scenario_generator(s.generator(path));
        else if (ext == ".tx")
          text = print_transformation_script(s.script(path));
        else if (ext == ".tst")
          text = print_state(s.load<State>(path, &parse_state));
        else
          s.fail(code::Usage, "unknown file kind " + path + " (want .tsal, .tsg, .tx or .tst)", exit_code::usage);

        if (s.jsonl())
        {
          json j = Session::record("canonical");
          j["file"] = path;
          j["text"] = text;
          s.emit(j);
        }
        else
          canonical += text;
      }
      if (!s.jsonl())
        s.payload(canonical);
      return exit_code::ok;
    }

    void verdict(Session& s, bool legal)
    {
      if (s.jsonl())
      {
        json j = Session::record("verdict");
        j["legal"] = legal;
        s.emit(j);
      }
      else
        s.payload(legal ? "LEGAL\n" : "ILLEGAL\n");
    }

    int cmd_check(Session& s)
    {
      const auto& f = s.opt().files;
      if (f.size() != 1 && f.size() != 2)
        s.fail(code::Usage, "expected DOMAIN.tsal [GENERATOR.tsg]", exit_code::usage);
      Domain d = s.domain(f[0]);
      LegalityReport r = f.size() == 2 ? check_environment(d, s.generator(f[1])) : check_domain(d);
      s.diagnostics(r.diagnostics);
      verdict(s, r.legal());
      return r.legal() ? exit_code::ok : exit_code::illegal;
    }

    int cmd_apply(Session& s)
    {
      expect_files(s, 3, "SCRIPT.tx DOMAIN.tsal GENERATOR.tsg");
      const auto& f = s.opt().files;
      auto ts = s.script(f[0]);
      Environment env{s.domain(f[1]), s.generator(f[2])};

      bool legal = true;
      if (s.opt().check)
      {
        for (std::size_t i = 0; i < ts.size(); ++i)
        {
          Environment next = tsal::apply(ts[i], env);
          if (next == env)
            s.diagnostic(Diagnostic{Severity::Warning, code::TxNoop,
                                    "step " + std::to_string(i) + " changes nothing: " + to_string(ts[i]), {}});
          env = std::move(next);
          auto r = check_environment(env.domain, env.sg);
          legal = r.legal();
          if (!legal && i + 1 < ts.size())
            s.diagnostic(Diagnostic{Severity::Warning, code::TxIllegalStep,
                                    "environment is illegal after step " + std::to_string(i) + " (" +
                                      error_codes(r.diagnostics).front() + ")",
                                    {}});
          if (!legal && i + 1 == ts.size())
            s.diagnostics(r.diagnostics);
        }
        if (ts.empty())
        {
          auto r = check_environment(env.domain, env.sg);
          s.diagnostics(r.diagnostics);
          legal = r.legal();
        }
      }
      else
        env = apply_sequence(ts, env.domain, env.sg);

      std::string dt = print_domain(env.domain);
      std::string gt = print_scenario_generator(env.sg);
      const std::string& stem = s.opt().out_path;
      if (!stem.empty())
      {
        s.write_file(stem + ".tsal", dt);
        s.write_file(stem + ".tsg", gt);
      }
      if (s.jsonl())
      {
        json j = Session::record("environment");
        if (stem.empty())
        {
          j["domain"] = dt;
          j["scenario_generator"] = gt;
        }
        else
          j["files"] = {stem + ".tsal", stem + ".tsg"};
        j["legal"] = legal;
        s.emit(j);
      }
      else if (stem.empty())
        s.payload(dt + gt);
      return legal ? exit_code::ok : exit_code::illegal;
    }

    int cmd_sample(Session& s)
    {
      expect_files(s, 2, "DOMAIN.tsal GENERATOR.tsg");
      const auto& f = s.opt().files;
      Domain d = s.domain(f[0]);
      ScenarioGenerator sg = s.generator(f[1]);
      std::string text = print_state(sample_state(d, sg, s.opt().seed));
      if (s.jsonl())
      {
        json j = Session::record("state");
        j["seed"] = s.opt().seed;
        j["text"] = text;
        s.emit(j);
      }
      else
        s.payload(text);
      return exit_code::ok;
    }

    int cmd_classify(Session& s)
    {
      expect_files(s, 3, "SCRIPT.tx DOMAIN.tsal GENERATOR.tsg");
      const auto& f = s.opt().files;
      auto ts = s.script(f[0]);
      Domain d = s.domain(f[1]);
      ScenarioGenerator sg = s.generator(f[2]);
      Symbol pov(s.opt().pov);
      Environment env = apply_sequence(ts, d, sg);
      if (!derived_from(pov, names::AGENT, env.domain))
        s.fail(code::Usage, "--pov-type " + pov.str() + " does not derive from AGENT", exit_code::usage);

      NoveltyVerdict v = classify(ts, d, sg, pov);
      if (!s.jsonl())
      {
        s.payload(to_string(v));
        return exit_code::ok;
      }
      for (std::size_t k = 0; k < novelty_level_count; ++k)
      {
        const auto& lv = v.levels[k];
        json j = Session::record("level");
        j["level"] = level_name(level_at(k));
        j["holds"] = lv.holds;
        j["steps"] = lv.steps;
        json els = json::array();
        for (const auto& e : lv.elements)
          els.push_back(e.str());
        j["elements"] = els;
        s.emit(j);
      }
      return exit_code::ok;
    }
  }

  int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
  {
    Options opt;
    std::string format = "text";

    CLI::App app{"Parse, check, transform, sample and classify T-SAL environments.", "tsal"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "jsonl"}));
    app.add_option("--out", opt.out_path, "Write the payload here (apply: path stem for .tsal/.tsg)");

    auto* parse = app.add_subcommand("parse", "Reprint files in canonical form");
    auto* check = app.add_subcommand("check", "Check legality of a domain and optional generator");
    auto* apply = app.add_subcommand("apply", "Apply a transformation script");
    auto* sample = app.add_subcommand("sample", "Sample an initial state");
    auto* classify = app.add_subcommand("classify", "Classify a script's novelty levels");

    for (auto* sc : {parse, check, apply, sample, classify})
      sc->add_option("files", opt.files, "Input files")->required();
    apply->add_flag("--check", opt.check, "Check legality after every step");
    sample->add_option("--seed", opt.seed, "Random seed");
    classify->add_option("--pov-type", opt.pov, "Type of the point-of-view agent")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try
    {
      app.parse(rev);
    }
    catch (const CLI::CallForHelp&)
    {
      out << app.help();
      return exit_code::ok;
    }
    catch (const CLI::CallForAllHelp&)
    {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_code::ok;
    }
    catch (const CLI::ParseError& e)
    {
      err << "tsal: " << e.what() << '\n';
      return exit_code::usage;
    }
    opt.format = format == "jsonl" ? Format::Jsonl : Format::Text;

    Session s(opt, out, err);
    try
    {
      if (parse->parsed())
        return cmd_parse(s);
      if (check->parsed())
        return cmd_check(s);
      if (apply->parsed())
        return cmd_apply(s);
      if (sample->parsed())
        return cmd_sample(s);
      return cmd_classify(s);
    }
    catch (const Exit& e)
    {
      return e.code;
    }
    catch (const Error& e)
    {
      s.diagnostic(Diagnostic{Severity::Error, code::Runtime, e.what(), {}});
      return exit_code::io;
    }
  }

}  // namespace tsal::cli
