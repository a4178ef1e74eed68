#include "fnvalence/catmap.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace fnv {

namespace {

std::vector<std::string> split_tab(const std::string& line) {
  std::vector<std::string> cols;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      cols.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cols.push_back(cur);
  return cols;
}

std::optional<SourceScheme> scheme_from(const std::string& s) {
  if (s == "ps" || s == "phrase-structure") return SourceScheme::PhraseStructure;
  if (s == "dep" || s == "dependency") return SourceScheme::Dependency;
  return std::nullopt;
}

}  // namespace

CatMap CatMap::load(std::istream& tsv) {
  CatMap m;
  std::string line;
  int lineno = 0;
  while (std::getline(tsv, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tab(line);
    if (cols.size() < 3)
      throw std::runtime_error("catmap: bad row at line " + std::to_string(lineno));
    auto scheme = scheme_from(cols[0]);
    if (!scheme)
      throw std::runtime_error("catmap: unknown scheme at line " + std::to_string(lineno));
    Entry e;
    if (cols[2] != "unsupported") {
      auto cat = phrase_cat_from(cols[2]);
      if (!cat)
        throw std::runtime_error("catmap: unknown category at line " + std::to_string(lineno));
      e.cat = cat;
    }
    if (cols.size() > 3) {
      std::stringstream fs(cols[3]);
      std::string flag;
      while (std::getline(fs, flag, ',')) {
        if (flag == "bracket-marker") e.bracket_marker = true;
        else if (flag == "head-marker") e.head_marker = true;
        else if (flag == "that") e.that_clause = true;
        else if (!flag.empty())
          throw std::runtime_error("catmap: unknown flag '" + flag + "' at line " +
                                   std::to_string(lineno));
      }
    }
    m.entries_[{*scheme, cols[1]}] = e;
  }
  return m;
}

CatMap CatMap::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("catmap: cannot open " + path);
  return load(in);
}

CatResult CatMap::generalize(const std::string& raw_label, SourceScheme scheme,
                             const std::optional<std::string>& head_text) const {
  std::string label = raw_label;
  std::optional<std::string> bracket;
  if (auto lb = label.find('['); lb != std::string::npos && label.back() == ']') {
    bracket = label.substr(lb + 1, label.size() - lb - 2);
    label.resize(lb);
  }

  const Entry* entry = nullptr;
  std::string probe = label;
  while (true) {
    auto it = entries_.find({scheme, probe});
    if (it != entries_.end()) {
      entry = &it->second;
      break;
    }
    // Dependency msd labels fall back on shorter dot-prefixes (VB.INF.AKT
    // -> VB.INF -> VB); phrase-structure labels are matched whole.
    auto dot = probe.rfind('.');
    if (scheme != SourceScheme::Dependency || dot == std::string::npos) break;
    probe.resize(dot);
  }

  if (!entry || !entry->cat) return Unsupported{raw_label};

  Generalized g;
  g.cat = *entry->cat;
  g.that_clause = entry->that_clause;
  if (g.cat == PhraseCat::Adv) {
    if (entry->bracket_marker && bracket) g.marker = bracket;
    else if (entry->head_marker && head_text) g.marker = head_text;
  }
  return g;
}

}  // namespace fnv
