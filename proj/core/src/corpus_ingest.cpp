#include "fnvalence/corpus_ingest.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

namespace fnv {

namespace {

namespace pt = boost::property_tree;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

const std::set<std::string>& english_particles() {
  static const std::set<std::string> parts = {
      "about", "after", "along", "around", "away", "back", "by",   "down",
      "for",   "in",    "like",  "of",     "off",  "on",   "out",  "over",
      "round", "through", "to",  "up",     "upon", "with"};
  return parts;
}

// BNC-style tag -> universal POS (target-token morphology only).
std::pair<std::string, std::string> upos_from_bnc(const std::string& tag,
                                                  const std::string& word) {
  if (tag.rfind("VV", 0) == 0 || tag.rfind("VB", 0) == 0 ||
      tag.rfind("VD", 0) == 0 || tag.rfind("VH", 0) == 0 ||
      tag.rfind("VM", 0) == 0) {
    return {"VERB", tag.size() > 2 && tag[2] == 'N' ? "Part" : "Fin"};
  }
  if (tag.rfind("PR", 0) == 0 || tag == "AVP" || tag == "TO0") return {"ADP", ""};
  if (tag.rfind("NN", 0) == 0 || tag.rfind("NP", 0) == 0) return {"NOUN", ""};
  if (tag.rfind("AJ", 0) == 0) return {"ADJ", ""};
  if (tag.rfind("AT", 0) == 0 || tag.rfind("DT", 0) == 0) return {"DET", ""};
  if (tag.rfind("PN", 0) == 0) {
    return {"PRON", word == "himself" || word == "herself" || word == "itself" ||
                            word == "themselves" || word == "myself" ||
                            word == "yourself" || word == "ourselves"
                        ? "Reflex"
                        : "Prs"};
  }
  return {"X", ""};
}

// SUC/KORP-style msd -> universal POS.
std::pair<std::string, std::string> upos_from_suc(const std::string& msd,
                                                  const std::string& word) {
  std::string head = msd.substr(0, msd.find('.'));
  std::string feats = msd.find('.') == std::string::npos ? "" : msd.substr(msd.find('.') + 1);
  if (head == "VB") {
    if (feats.rfind("INF", 0) == 0) return {"VERB", "Inf"};
    if (feats.rfind("SUP", 0) == 0) return {"VERB", "Sup"};
    return {"VERB", "Fin"};  // PRS/PRT, either voice
  }
  if (head == "PL" || head == "PP" || head == "AB") return {"ADP", ""};
  if (head == "PN") return {"PRON", lower(word) == "sig" ? "Reflex" : "Prs"};
  if (head == "NN" || head == "PM") return {"NOUN", ""};
  if (head == "JJ") return {"ADJ", ""};
  if (head == "SN") return {"SCONJ", ""};
  return {"X", ""};
}

bool resolve_core(const IngestOptions& opts, const std::string& frame,
                  const std::string& fe, bool attr_core) {
  auto it = opts.core_fes.find(frame);
  if (it == opts.core_fes.end()) return attr_core;
  return it->second.count(fe) > 0;
}

void collect_sentences(const pt::ptree& node, std::vector<const pt::ptree*>& out) {
  for (const auto& [name, child] : node) {
    if (name == "sentence") out.push_back(&child);
    else if (name != "<xmlattr>") collect_sentences(child, out);
  }
}

std::string attr(const pt::ptree& node, const std::string& name,
                 const std::string& fallback = "") {
  return node.get<std::string>("<xmlattr>." + name, fallback);
}

// Lemma components for an LU; prefers the explicit lemma's words, token
// POS info when the counts line up.
LuMorph build_lu_morph(const std::string& lemma,
                       const std::vector<std::pair<std::string, std::string>>& token_pos) {
  LuMorph m;
  m.base_form = lemma;
  std::vector<std::string> words;
  std::istringstream is(lemma);
  for (std::string w; is >> w;) words.push_back(w);
  for (std::size_t i = 0; i < words.size(); ++i) {
    MorphComponent c;
    c.text = words[i];
    if (i < token_pos.size() && !token_pos[i].first.empty()) {
      c.upos = token_pos[i].first;
      c.feats = token_pos[i].second;
    } else if (i == 0) {
      c.upos = "VERB";
      c.feats = "Fin";
    } else if (lower(words[i]) == "sig") {
      c.upos = "PRON";
      c.feats = "Reflex";
    } else if (english_particles().count(lower(words[i]))) {
      c.upos = "ADP";
    } else {
      c.upos = "NOUN";
    }
    m.components.push_back(std::move(c));
  }
  // The citation form of an LU is a finite-capable verb whatever tense the
  // corpus token happens to be in.
  if (!m.components.empty() && m.components[0].upos == "VERB")
    m.components[0].feats = "Fin";
  return m;
}

struct Label {
  Span span;
  std::string name;
  bool has_span = false;
  bool core_attr = true;
};

}  // namespace

std::vector<AnnotatedSentence> parse_phrase_structure_corpus(
    std::istream& source, const IngestOptions& opts) {
  pt::ptree doc;
  try {
    pt::read_xml(source, doc);
  } catch (const pt::xml_parser_error& e) {
    throw ParseError(std::string("malformed XML: ") + e.what());
  }

  std::vector<const pt::ptree*> nodes;
  collect_sentences(doc, nodes);

  std::vector<AnnotatedSentence> out;
  int seq = 0;
  for (const pt::ptree* snode : nodes) {
    AnnotatedSentence s;
    s.scheme = SourceScheme::PhraseStructure;
    s.language = opts.language.empty() ? "eng" : opts.language;
    s.source_id = attr(*snode, "ID", attr(*snode, "id", "ps:" + std::to_string(seq)));
    ++seq;
    s.frame = attr(*snode, "frame", opts.default_frame);
    s.text = snode->get<std::string>("text", "");

    std::string lu_name = attr(*snode, "luName", opts.default_lu);
    if (auto dot = lu_name.find('.'); dot != std::string::npos) lu_name.resize(dot);
    std::replace(lu_name.begin(), lu_name.end(), '_', ' ');

    std::vector<Label> fe_labels, gf_labels, pt_labels, target_labels, bnc_labels;
    for (const auto& [aname, aset] : *snode) {
      if (aname != "annotationSet") continue;
      for (const auto& [lname, layer] : aset) {
        if (lname != "layer") continue;
        std::string layer_name = attr(layer, "name");
        for (const auto& [labname, lab] : layer) {
          if (labname != "label") continue;
          Label l;
          l.name = attr(lab, "name");
          std::string start = attr(lab, "start"), end = attr(lab, "end");
          if (!start.empty() && !end.empty()) {
            l.has_span = true;
            l.span = {std::stoi(start), std::stoi(end)};
          }
          l.core_attr = attr(lab, "core", "yes") != "no";
          if (layer_name == "FE") fe_labels.push_back(l);
          else if (layer_name == "GF") gf_labels.push_back(l);
          else if (layer_name == "PT") pt_labels.push_back(l);
          else if (layer_name == "Target") target_labels.push_back(l);
          else if (layer_name == "BNC") bnc_labels.push_back(l);
        }
      }
    }

    for (const Label& t : target_labels) {
      if (!t.has_span) continue;
      s.target_span.push_back(t.span);
      std::string tag;
      for (const Label& b : bnc_labels)
        if (b.has_span && b.span == t.span) tag = b.name;
      s.target_msd.push_back(tag);
    }
    std::sort(s.target_span.begin(), s.target_span.end());
    if (s.target_span.empty())
      s.flags.push_back({Diag::MissingTarget, s.source_id});

    if (lu_name.empty()) {
      std::vector<std::string> words;
      for (const Span& t : s.target_span) words.push_back(lower(s.span_text(t)));
      for (std::size_t i = 0; i < words.size(); ++i)
        lu_name += (i ? " " : "") + words[i];
    }
    s.lu_lemma = lu_name;
    s.lu_pos = "VERB";

    std::vector<std::pair<std::string, std::string>> target_pos;
    for (std::size_t i = 0; i < s.target_span.size(); ++i) {
      if (!s.target_msd[i].empty())
        target_pos.push_back(upos_from_bnc(s.target_msd[i], lower(s.span_text(s.target_span[i]))));
      else
        target_pos.push_back({"", ""});
    }
    s.lu_morph_hint = build_lu_morph(s.lu_lemma, target_pos);

    // Join FE/GF/PT layers on span equality; overlapping near-misses keep
    // the FE layer's span and get flagged.
    for (const Label& fe : fe_labels) {
      FESpan span;
      span.fe_name = fe.name;
      span.is_core = resolve_core(opts, s.frame, fe.name, fe.core_attr);
      const Label* gf = nullptr;
      const Label* ptl = nullptr;
      bool repaired = false;
      if (fe.has_span) {
        for (const Label& g : gf_labels)
          if (g.has_span && g.span == fe.span) gf = &g;
        for (const Label& p : pt_labels)
          if (p.has_span && p.span == fe.span) ptl = &p;
        if (!gf)
          for (const Label& g : gf_labels)
            if (g.has_span && g.span.overlaps(fe.span)) { gf = &g; repaired = true; }
        if (!ptl)
          for (const Label& p : pt_labels)
            if (p.has_span && p.span.overlaps(fe.span)) { ptl = &p; repaired = true; }
      }
      if (!fe.has_span || (!gf && !ptl)) {
        // Null instantiation: no grammatical annotation to work with.
        s.fe_spans.push_back(std::move(span));
        continue;
      }
      span.span = fe.span;
      if (ptl) span.raw_phrase_type = ptl->name;
      if (gf) span.raw_gf = gf->name;
      if (repaired) s.flags.push_back({Diag::SpanRepaired, fe.name});
      if (fe.span.start < 0 || fe.span.end >= static_cast<int>(s.text.size()))
        s.flags.push_back({Diag::SpanOutOfBounds, fe.name});
      s.fe_spans.push_back(std::move(span));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<AnnotatedSentence> parse_dependency_corpus(
    std::istream& source, const IngestOptions& opts) {
  pt::ptree doc;
  try {
    pt::read_xml(source, doc);
  } catch (const pt::xml_parser_error& e) {
    throw ParseError(std::string("malformed XML: ") + e.what());
  }

  std::vector<const pt::ptree*> nodes;
  collect_sentences(doc, nodes);

  struct Token {
    std::string text, pos, msd, ref, dephead, deprel;
    std::string element;  // enclosing element name, empty for plain tokens
    Span span;            // char span in the joined text
  };

  std::vector<AnnotatedSentence> out;
  int seq = 0;
  for (const pt::ptree* snode : nodes) {
    AnnotatedSentence s;
    s.scheme = SourceScheme::Dependency;
    s.language = opts.language.empty() ? "swe" : opts.language;
    s.source_id = attr(*snode, "ID", attr(*snode, "id", "dep:" + std::to_string(seq)));
    ++seq;
    s.frame = attr(*snode, "frame", opts.default_frame);

    std::vector<Token> tokens;
    std::vector<std::pair<std::string, std::vector<int>>> elements;  // name -> token idxs
    auto add_token = [&](const pt::ptree& w, const std::string& element) {
      Token t;
      t.text = w.get_value<std::string>();
      t.pos = attr(w, "pos");
      t.msd = attr(w, "msd");
      t.ref = attr(w, "ref");
      t.dephead = attr(w, "dephead");
      t.deprel = attr(w, "deprel");
      t.element = element;
      tokens.push_back(std::move(t));
      return static_cast<int>(tokens.size()) - 1;
    };
    for (const auto& [cname, child] : *snode) {
      if (cname == "w") {
        add_token(child, "");
      } else if (cname == "element") {
        std::string ename = attr(child, "name");
        std::vector<int> idxs;
        for (const auto& [wname, w] : child)
          if (wname == "w") idxs.push_back(add_token(w, ename));
        elements.emplace_back(ename, std::move(idxs));
      }
    }

    // Joined text with one space between tokens; spans are exact.
    int pos_char = 0;
    for (Token& t : tokens) {
      if (pos_char > 0) {
        s.text += " ";
        ++pos_char;
      }
      t.span = {pos_char, pos_char + static_cast<int>(t.text.size()) - 1};
      s.text += t.text;
      pos_char = t.span.end + 1;
    }

    std::set<std::string> refs;
    for (const Token& t : tokens)
      if (!t.ref.empty()) refs.insert(t.ref);
    for (const Token& t : tokens)
      if (!t.dephead.empty() && !refs.count(t.dephead))
        s.flags.push_back({Diag::DepheadOutOfRange, t.text});

    // Head of a token group: the unique token whose dephead points outside
    // the group (the LU counts as outside); ties take the first in order.
    auto head_of = [&](const std::vector<int>& idxs, bool* ambiguous) -> int {
      std::set<std::string> inside;
      for (int i : idxs)
        if (!tokens[i].ref.empty()) inside.insert(tokens[i].ref);
      std::vector<int> heads;
      for (int i : idxs)
        if (tokens[i].dephead.empty() || !inside.count(tokens[i].dephead))
          heads.push_back(i);
      *ambiguous = heads.size() != 1;
      return heads.empty() ? idxs.front() : heads.front();
    };

    const std::vector<int>* lu_idxs = nullptr;
    for (const auto& [ename, idxs] : elements)
      if (ename == "LU" && !idxs.empty()) lu_idxs = &idxs;

    if (!lu_idxs) {
      s.flags.push_back({Diag::MissingLU, s.source_id});
      s.flags.push_back({Diag::MissingTarget, s.source_id});
    } else {
      for (int i : *lu_idxs) {
        s.target_span.push_back(tokens[i].span);
        s.target_msd.push_back(tokens[i].msd.empty() ? tokens[i].pos : tokens[i].msd);
      }
    }

    std::string lu_name = attr(*snode, "luName", opts.default_lu);
    if (auto dot = lu_name.find('.'); dot != std::string::npos) lu_name.resize(dot);
    std::replace(lu_name.begin(), lu_name.end(), '_', ' ');
    if (lu_name.empty() && lu_idxs) {
      for (std::size_t k = 0; k < lu_idxs->size(); ++k)
        lu_name += (k ? " " : "") + lower(tokens[(*lu_idxs)[k]].text);
    }
    s.lu_lemma = lu_name;
    s.lu_pos = "VERB";

    std::vector<std::pair<std::string, std::string>> target_pos;
    if (lu_idxs)
      for (int i : *lu_idxs)
        target_pos.push_back(upos_from_suc(
            tokens[i].msd.empty() ? tokens[i].pos : tokens[i].msd, tokens[i].text));
    s.lu_morph_hint = build_lu_morph(s.lu_lemma, target_pos);

    for (const auto& [ename, idxs] : elements) {
      if (ename == "LU" || idxs.empty()) continue;
      FESpan fe;
      fe.fe_name = ename;
      fe.is_core = resolve_core(opts, s.frame, ename, true);
      fe.span = Span{tokens[idxs.front()].span.start, tokens[idxs.back()].span.end};
      bool ambiguous = false;
      int h = head_of(idxs, &ambiguous);
      if (ambiguous) s.flags.push_back({Diag::AmbiguousHead, ename});
      const Token& ht = tokens[h];
      fe.raw_phrase_type = ht.msd.empty() ? ht.pos : ht.msd;
      if (!ht.deprel.empty()) fe.raw_gf = ht.deprel;
      fe.head_text = lower(ht.text);
      s.fe_spans.push_back(std::move(fe));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Diagnostic> validate_sentence(const AnnotatedSentence& s) {
  std::vector<Diagnostic> diags;
  if (s.target_span.empty()) diags.push_back({Diag::MissingTarget, s.source_id});
  if (s.lu_lemma.empty()) diags.push_back({Diag::MissingLU, s.source_id});

  for (std::size_t i = 0; i < s.fe_spans.size(); ++i) {
    const FESpan& a = s.fe_spans[i];
    if (!a.span) continue;
    if (a.span->start < 0 || a.span->end >= static_cast<int>(s.text.size()) ||
        a.span->end < a.span->start)
      diags.push_back({Diag::SpanOutOfBounds, a.fe_name});
    for (const Span& t : s.target_span)
      if (a.span->overlaps(t)) {
        diags.push_back({Diag::OverlappingFEs, a.fe_name + "/target"});
        break;
      }
    for (std::size_t j = i + 1; j < s.fe_spans.size(); ++j) {
      const FESpan& b = s.fe_spans[j];
      if (b.span && a.span->overlaps(*b.span)) {
        diags.push_back({Diag::OverlappingFEs, a.fe_name + "/" + b.fe_name});
      }
    }
  }

  // Same-named FEs whose raw types disagree; the generalized-category
  // variant of this check lives in pattern extraction.
  for (std::size_t i = 0; i < s.fe_spans.size(); ++i) {
    for (std::size_t j = i + 1; j < s.fe_spans.size(); ++j) {
      const FESpan& a = s.fe_spans[i];
      const FESpan& b = s.fe_spans[j];
      if (a.fe_name == b.fe_name && a.raw_phrase_type && b.raw_phrase_type &&
          *a.raw_phrase_type != *b.raw_phrase_type)
        diags.push_back({Diag::RepeatedFEDifferentTypes, a.fe_name});
    }
  }

  for (const Diagnostic& f : s.flags)
    if (f.code == Diag::DepheadOutOfRange || f.code == Diag::MissingLU ||
        f.code == Diag::IrreconcilableLabels)
      diags.push_back(f);

  // De-duplicate by code+detail, first occurrence order.
  std::vector<Diagnostic> unique;
  std::set<std::pair<int, std::string>> seen;
  for (Diagnostic& d : diags)
    if (seen.insert({static_cast<int>(d.code), d.detail}).second)
      unique.push_back(std::move(d));
  return unique;
}

}  // namespace fnv
