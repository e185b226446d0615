#include "tsal/sexpr.hpp"

#include <cctype>

#include "tsal/symbol.hpp"

namespace tsal
{

  namespace
  {
    struct Replacement
    {
      std::string_view from;
      std::string_view to;
    };

    // Typographic forms that show up when domains are copied out of documents.
    constexpr Replacement replacements[] = {
      {"\xE2\x80\x93", "-"},   // en dash
      {"\xE2\x80\x94", "-"},   // em dash
      {"\xE2\x88\x92", "-"},   // minus sign
      {"\xE2\x89\xA0", "!="},  // not equal
      {"\xE2\x89\xA4", "<="},
      {"\xE2\x89\xA5", ">="},
    };

    constexpr std::string_view open_curly = "\xE2\x80\x9C";
    constexpr std::string_view close_curly = "\xE2\x80\x9D";

    bool is_digit(char c) { return c >= '0' && c <= '9'; }

    // [+-]? (digits [. digits?] | . digits) ([eE] [+-]? digits)?
    bool is_number(std::string_view s)
    {
      std::size_t i = 0;
      if (i < s.size() && (s[i] == '+' || s[i] == '-'))
        ++i;
      std::size_t int_digits = 0, frac_digits = 0;
      while (i < s.size() && is_digit(s[i]))
        ++i, ++int_digits;
      if (i < s.size() && s[i] == '.')
      {
        ++i;
        while (i < s.size() && is_digit(s[i]))
          ++i, ++frac_digits;
      }
      if (int_digits + frac_digits == 0)
        return false;
      if (i < s.size() && (s[i] == 'e' || s[i] == 'E'))
      {
        ++i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-'))
          ++i;
        std::size_t exp_digits = 0;
        while (i < s.size() && is_digit(s[i]))
          ++i, ++exp_digits;
        if (exp_digits == 0)
          return false;
      }
      return i == s.size();
    }

    bool looks_numeric(std::string_view s)
    {
      std::size_t i = 0;
      if (i < s.size() && (s[i] == '+' || s[i] == '-'))
        ++i;
      if (i < s.size() && s[i] == '.')
        ++i;
      return i < s.size() && is_digit(s[i]);
    }

    class Lexer
    {
    public:
      Lexer(std::string_view text, const std::string& file) : text_(text), file_(file) {}

      Parsed<std::vector<SExpr>> run()
      {
        Parsed<std::vector<SExpr>> out;
        std::vector<SExpr> top;
        std::vector<SExpr> stack;

        auto emit = [&](SExpr e) {
          if (stack.empty())
            top.push_back(std::move(e));
          else
            stack.back().items.push_back(std::move(e));
        };

        while (pos_ < text_.size())
        {
          char c = text_[pos_];
          auto uc = static_cast<unsigned char>(c);
          if (uc <= 0x20 || c == ',' || uc == 0x7F)
          {
            advance(1);
            continue;
          }
          if (c == ';')
          {
            while (pos_ < text_.size() && text_[pos_] != '\n')
              advance(1);
            continue;
          }
          if (c == '(' || c == '[')
          {
            if (stack.size() >= max_nesting_depth)
            {
              error(out.diagnostics, code::SynDepth, "nesting deeper than " + std::to_string(max_nesting_depth),
                    here(1));
              out.value = std::move(top);
              return out;
            }
            SExpr list;
            list.kind = SExpr::Kind::List;
            list.bracket = c == '[';
            list.span = here(1);
            stack.push_back(std::move(list));
            advance(1);
            continue;
          }
          if (c == ')' || c == ']')
          {
            if (stack.empty())
            {
              error(out.diagnostics, code::SynUnexpectedClose, "unexpected closing delimiter", here(1));
              advance(1);
              continue;
            }
            SExpr list = std::move(stack.back());
            stack.pop_back();
            if (list.bracket != (c == ']'))
              error(out.diagnostics, code::SynUnbalanced, "mismatched closing delimiter", here(1));
            advance(1);
            list.span.end = pos_;
            emit(std::move(list));
            continue;
          }
          if (c == '"' || starts_with(open_curly))
          {
            auto s = read_string(out.diagnostics);
            if (!s)
            {
              out.value = std::move(top);
              return out;
            }
            emit(std::move(*s));
            continue;
          }
          if (starts_with(close_curly))
          {
            error(out.diagnostics, code::SynUnexpectedClose, "closing quote without an opening one",
                  here(close_curly.size()));
            advance(close_curly.size());
            continue;
          }
          emit(read_atom(out.diagnostics));
        }

        if (!stack.empty())
          error(out.diagnostics, code::SynUnbalanced, "unclosed list", stack.front().span);
        out.value = std::move(top);
        return out;
      }

    private:
      bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

      void advance(std::size_t n)
      {
        for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_)
        {
          auto uc = static_cast<unsigned char>(text_[pos_]);
          if (text_[pos_] == '\n')
          {
            ++line_;
            column_ = 1;
          }
          else if ((uc & 0xC0) != 0x80)
            ++column_;
        }
      }

      SourceSpan here(std::size_t len) const
      {
        return SourceSpan{file_, pos_, std::min(pos_ + len, text_.size()), line_, column_};
      }

      void error(Diagnostics& ds, const char* c, std::string msg, SourceSpan span)
      {
        ds.push_back(Diagnostic{Severity::Error, c, std::move(msg), std::move(span)});
      }

      std::optional<SExpr> read_string(Diagnostics& ds)
      {
        SExpr s;
        s.kind = SExpr::Kind::String;
        s.span = here(1);
        advance(text_[pos_] == '"' ? 1 : open_curly.size());
        while (pos_ < text_.size())
        {
          if (text_[pos_] == '"' || starts_with(close_curly))
          {
            advance(text_[pos_] == '"' ? 1 : close_curly.size());
            s.span.end = pos_;
            return s;
          }
          if (text_[pos_] == '\\' && pos_ + 1 < text_.size())
          {
            s.text.push_back(text_[pos_ + 1]);
            advance(2);
            continue;
          }
          s.text.push_back(text_[pos_]);
          advance(1);
        }
        error(ds, code::SynUnterminatedString, "unterminated string", s.span);
        return std::nullopt;
      }

      bool is_delimiter() const
      {
        char c = text_[pos_];
        auto uc = static_cast<unsigned char>(c);
        return uc <= 0x20 || uc == 0x7F || c == '(' || c == ')' || c == '[' || c == ']' || c == ';' ||
          c == ',' || c == '"' || starts_with(open_curly) || starts_with(close_curly);
      }

      SExpr read_atom(Diagnostics& ds)
      {
        SExpr a;
        a.span = here(0);
        std::string raw;
        while (pos_ < text_.size() && !is_delimiter())
        {
          bool replaced = false;
          for (const auto& r : replacements)
            if (starts_with(r.from))
            {
              raw.append(r.to);
              advance(r.from.size());
              replaced = true;
              break;
            }
          if (!replaced)
          {
            raw.push_back(text_[pos_]);
            advance(1);
          }
        }
        a.span.end = pos_;
        if (is_number(raw))
        {
          a.kind = SExpr::Kind::Number;
          a.text = raw;
        }
        else
        {
          if (looks_numeric(raw))
            error(ds, code::SynBadNumber, "malformed number '" + raw + "'", a.span);
          a.kind = SExpr::Kind::Symbol;
          a.text = to_upper(raw);
        }
        return a;
      }

      std::string_view text_;
      const std::string& file_;
      std::size_t pos_ = 0;
      std::size_t line_ = 1;
      std::size_t column_ = 1;
    };
  }

  Parsed<std::vector<SExpr>> read_sexprs(std::string_view text, const std::string& file)
  {
    return Lexer(text, file).run();
  }

}  // namespace tsal
