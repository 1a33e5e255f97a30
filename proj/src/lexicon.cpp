#include "dynamik/lexicon.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dynamik/error.hpp"

namespace dynamik {
namespace detail {
extern const std::string_view kBuiltinLexicon;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string line_error(std::size_t line, std::string_view what) {
  std::ostringstream os;
  os << "lexicon line " << line << ": " << what;
  return os.str();
}

}  // namespace

std::string fold_case(std::string_view surface) {
  std::string out;
  out.reserve(surface.size());
  for (std::size_t i = 0; i < surface.size(); ++i) {
    // U+2019 RIGHT SINGLE QUOTATION MARK is E2 80 99.
    if (surface.compare(i, 3, "\xE2\x80\x99") == 0) {
      out.push_back('\'');
      i += 2;
      continue;
    }
    const char c = surface[i];
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
  }
  return out;
}

Lexicon Lexicon::parse(std::string_view text) {
  Lexicon lex;
  bool in_negatives = false;
  std::size_t line_no = 0;

  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line != "[negatives]")
        throw ParseError(line_no, line_error(line_no, "unknown section " + std::string(line)));
      if (in_negatives) throw ParseError(line_no, line_error(line_no, "repeated [negatives] section"));
      in_negatives = true;
      continue;
    }

    if (in_negatives) {
      if (line.find('\t') != std::string_view::npos)
        throw ParseError(line_no, line_error(line_no, "negative entries take no subkind"));
      auto key = fold_case(line);
      if (lex.entries_.count(key))
        throw ParseError(line_no, line_error(line_no, "'" + key + "' is already a function entry"));
      if (!lex.negatives_.insert(std::move(key)).second)
        throw ParseError(line_no, line_error(line_no, "duplicate negative '" + std::string(line) + "'"));
      continue;
    }

    const auto tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw ParseError(line_no, line_error(line_no, "expected surface<TAB>subkind"));
    const auto surface = trim(line.substr(0, tab));
    const auto subkind_name = trim(line.substr(tab + 1));
    if (surface.empty()) throw ParseError(line_no, line_error(line_no, "empty surface form"));

    const auto subkind = parse_subkind(subkind_name);
    if (!subkind || family_of(*subkind) != Family::Function)
      throw ParseError(line_no, line_error(line_no, "'" + std::string(subkind_name) +
                                                        "' is not a function-word subkind"));

    auto key = fold_case(surface);
    if (lex.entries_.count(key))
      throw ParseError(line_no, line_error(line_no, "duplicate entry '" + key + "'"));
    if (lex.negatives_.count(key))
      throw ParseError(line_no, line_error(line_no, "'" + key + "' is already a negative"));
    lex.entries_.emplace(std::move(key), *subkind);
  }
  return lex;
}

Lexicon Lexicon::from_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open lexicon file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const Lexicon& Lexicon::builtin() {
  static const Lexicon lex = parse(detail::kBuiltinLexicon);
  return lex;
}

std::optional<Subkind> Lexicon::lookup(std::string_view surface) const {
  const auto it = entries_.find(fold_case(surface));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool Lexicon::is_listed_negative(std::string_view surface) const {
  return negatives_.count(fold_case(surface)) > 0;
}

Lexicon load_lexicon(const std::optional<std::filesystem::path>& path) {
  if (path) return Lexicon::from_file(*path);
  if (const char* env = std::getenv("DYNAMIK_LEXICON"); env && *env) return Lexicon::from_file(env);
  return Lexicon::builtin();
}

}  // namespace dynamik
