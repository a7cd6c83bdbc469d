#include "varpat/core.hpp"

#include <algorithm>
#include <unordered_map>

namespace varpat {

Pattern::Pattern(SymbolSeq symbols, std::vector<std::string> variable_names)
    : symbols_(std::move(symbols)), names_(std::move(variable_names)) {
  if (symbols_.empty()) throw Error("pattern must be nonempty");
  for (const Symbol& s : symbols_) {
    if (s.is_variable() && s.value >= names_.size()) throw Error("variable id out of range");
  }
}

std::vector<std::size_t> Pattern::occurrence_counts() const {
  std::vector<std::size_t> counts(names_.size(), 0);
  for (const Symbol& s : symbols_) {
    if (s.is_variable()) ++counts[s.value];
  }
  return counts;
}

std::vector<VariableId> Pattern::variables() const {
  std::vector<VariableId> out;
  const auto counts = occurrence_counts();
  for (VariableId id = 0; id < counts.size(); ++id) {
    if (counts[id] > 0) out.push_back(id);
  }
  return out;
}

std::size_t Pattern::terminal_count() const {
  return static_cast<std::size_t>(
      std::count_if(symbols_.begin(), symbols_.end(), [](const Symbol& s) { return s.is_terminal(); }));
}

bool Pattern::has_variables() const {
  return std::any_of(symbols_.begin(), symbols_.end(), [](const Symbol& s) { return s.is_variable(); });
}

// ---- text syntax -----------------------------------------------------------

Terminal terminal_from_char(char c, std::size_t position) {
  if (c >= 'a' && c <= 'z') return static_cast<Terminal>(c - 'a');
  if (c >= '0' && c <= '9') return static_cast<Terminal>(26 + (c - '0'));
  throw ParseError(std::string("illegal terminal character '") + c + "'", position);
}

char terminal_to_char(Terminal t) {
  if (t < 26) return static_cast<char>('a' + t);
  if (t < kTextAlphabetSize) return static_cast<char>('0' + (t - 26));
  throw Error("terminal code " + std::to_string(t) + " has no text form");
}

namespace {

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

SymbolSeq parse_symbols(std::string_view text, std::vector<std::string>& names, bool allow_empty,
                        std::size_t position_offset) {
  if (allow_empty && text == "()") return {};
  if (text.empty()) throw ParseError("empty pattern", position_offset + 1);

  std::unordered_map<std::string, VariableId> index;
  for (VariableId id = 0; id < names.size(); ++id) index.emplace(names[id], id);

  SymbolSeq out;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t pos = position_offset + i + 1;
    const char c = text[i];
    if (c == '[') {
      std::size_t j = i + 1;
      while (j < text.size() && is_name_char(text[j])) ++j;
      if (j >= text.size()) throw ParseError("unterminated variable", pos);
      if (text[j] != ']') {
        throw ParseError(std::string("illegal character '") + text[j] + "' in variable name",
                         position_offset + j + 1);
      }
      if (j == i + 1) throw ParseError("empty variable name", pos);
      std::string name(text.substr(i + 1, j - i - 1));
      auto [it, inserted] = index.emplace(name, static_cast<VariableId>(names.size()));
      if (inserted) names.push_back(std::move(name));
      out.push_back(Symbol::variable(it->second));
      i = j + 1;
    } else if (c == ']') {
      throw ParseError("unbalanced ']'", pos);
    } else {
      out.push_back(Symbol::terminal(terminal_from_char(c, pos)));
      ++i;
    }
  }
  return out;
}

Pattern parse_pattern(std::string_view text) {
  std::vector<std::string> names;
  SymbolSeq symbols = parse_symbols(text, names, false);
  return Pattern(std::move(symbols), std::move(names));
}

Word parse_word(std::string_view text) {
  if (text == "()") return {};
  Word w;
  w.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) w.push_back(terminal_from_char(text[i], i + 1));
  return w;
}

std::string to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Terminal t : w) {
    if (t < kTextAlphabetSize) {
      s.push_back(terminal_to_char(t));
    } else {
      s += "{" + std::to_string(t) + "}";
    }
  }
  return s;
}

std::string to_display(const Word& w) { return w.empty() ? "()" : to_string(w); }

std::string to_string(std::span<const Symbol> symbols, const std::vector<std::string>& names) {
  if (symbols.empty()) return "()";
  std::string s;
  for (const Symbol& sym : symbols) {
    if (sym.is_variable()) {
      s += "[" + names.at(sym.value) + "]";
    } else {
      s += to_string(Word{sym.value});
    }
  }
  return s;
}

std::string to_string(const Pattern& p) { return to_string(p.symbols(), p.variable_names()); }

// ---- substitution ----------------------------------------------------------

Word apply_substitution(std::span<const Symbol> symbols, const Substitution& h) {
  Word out;
  for (const Symbol& s : symbols) {
    if (s.is_terminal()) {
      out.push_back(s.value);
      continue;
    }
    if (s.value >= h.images.size()) {
      throw Error("substitution has no image for variable id " + std::to_string(s.value));
    }
    const Word& image = h.images[s.value];
    if (image.empty() && h.mode == SubstitutionMode::non_erasing) {
      throw Error("empty image in non-erasing substitution");
    }
    out.insert(out.end(), image.begin(), image.end());
  }
  return out;
}

Word apply_substitution(const Pattern& p, const Substitution& h) {
  return apply_substitution(p.symbols(), h);
}

// ---- structure -------------------------------------------------------------

namespace {

void require_variables(const Pattern& p) {
  if (!p.has_variables()) throw Error("no variables");
}

}  // namespace

Pattern skeleton(const Pattern& p) {
  require_variables(p);
  SymbolSeq vars;
  for (const Symbol& s : p.symbols()) {
    if (s.is_variable()) vars.push_back(s);
  }
  return Pattern(std::move(vars), p.variable_names());
}

OneVarBlockDecomposition one_variable_blocks(const Pattern& p) {
  require_variables(p);
  OneVarBlockDecomposition d;
  for (const Symbol& s : p.symbols()) {
    if (s.is_terminal()) {
      (d.blocks.empty() ? d.prefix : d.blocks.back().trailing).push_back(s.value);
    } else if (!d.blocks.empty() && d.blocks.back().variable == s.value && d.blocks.back().trailing.empty()) {
      ++d.blocks.back().exponent;
    } else {
      d.blocks.push_back({s.value, 1, {}});
    }
  }
  return d;
}

std::map<VariableId, Scope> scopes(const Pattern& p) {
  require_variables(p);
  std::map<VariableId, Scope> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_variable()) continue;
    auto [it, inserted] = out.try_emplace(p[i].value, Scope{i + 1, i + 1});
    if (!inserted) it->second.last = i + 1;
  }
  return out;
}

// ---- periodicity -----------------------------------------------------------

std::size_t kmp_find(std::span<const Terminal> haystack, std::span<const Terminal> needle,
                     std::size_t from) {
  if (needle.empty()) return from <= haystack.size() ? from : std::string::npos;
  if (from >= haystack.size()) return std::string::npos;
  const auto border = prefix_function(needle);
  std::size_t k = 0;
  for (std::size_t i = from; i < haystack.size(); ++i) {
    while (k > 0 && haystack[i] != needle[k]) k = border[k - 1];
    if (haystack[i] == needle[k]) ++k;
    if (k == needle.size()) return i + 1 - needle.size();
  }
  return std::string::npos;
}

std::vector<std::size_t> kmp_find_all(std::span<const Terminal> haystack,
                                      std::span<const Terminal> needle) {
  std::vector<std::size_t> hits;
  if (needle.empty()) {
    for (std::size_t i = 0; i <= haystack.size(); ++i) hits.push_back(i);
    return hits;
  }
  const auto border = prefix_function(needle);
  std::size_t k = 0;
  for (std::size_t i = 0; i < haystack.size(); ++i) {
    while (k > 0 && haystack[i] != needle[k]) k = border[k - 1];
    if (haystack[i] == needle[k]) ++k;
    if (k == needle.size()) {
      hits.push_back(i + 1 - needle.size());
      k = border[k - 1];
    }
  }
  return hits;
}

std::size_t period(const Word& w) { return minimal_period_of(std::span<const Terminal>(w)); }

PrimitiveRoot primitive_root(const Word& w) {
  const auto [len, exponent] = root_length_and_exponent(std::span<const Terminal>(w));
  return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len)), exponent};
}

}  // namespace varpat
