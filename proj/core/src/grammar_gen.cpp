#include "fnvalence/grammar_gen.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace fnv {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string empty_const(PhraseCat c) {
  switch (c) {
    case PhraseCat::NP: return "emptyNP";
    case PhraseCat::VP: return "emptyVP";
    case PhraseCat::Adv: return "emptyAdv";
    case PhraseCat::S: return "emptyS";
    case PhraseCat::QS: return "emptyQS";
  }
  return "emptyNP";
}

// Category of an argument identifier ("Experiencer_NP" -> NP).
PhraseCat arg_cat(const std::string& arg) {
  auto us = arg.rfind('_');
  auto cat = phrase_cat_from(arg.substr(us == std::string::npos ? 0 : us + 1));
  return cat.value_or(PhraseCat::NP);
}

std::string maybe_expr(const std::string& arg, PhraseCat cat) {
  if (arg.empty()) return empty_const(cat);
  return "fromMaybe " + to_string(cat) + " " + empty_const(cat) + " " + lower(arg);
}

}  // namespace

SyntacticSignature syntactic_signature(const ValencePattern& v) {
  SyntacticSignature sig;
  sig.verb_type = v.verb_type;
  sig.voice = v.voice;
  for (const FETriple& t : v.fes) {
    std::string label = to_string(t.cat);
    if (t.rel) label += "_" + to_string(*t.rel);
    sig.args.push_back(std::move(label));
  }
  std::sort(sig.args.begin(), sig.args.end());
  return sig;
}

std::string SyntacticSignature::str() const {
  std::string s = to_string(verb_type) + " " + to_string(voice);
  for (const std::string& a : args) s += " " + a;
  return s;
}

std::string fe_category(const std::string& fe_name, PhraseCat cat) {
  return fe_name + "_" + to_string(cat);
}

std::string function_name(const ValencePattern& v,
                          const std::vector<ValencePattern>& siblings) {
  std::string base = v.frame + "_" + to_string(v.verb_type);
  if (v.voice == Voice::Pass) base += "_Pass";

  std::vector<const ValencePattern*> same;
  for (const ValencePattern& s : siblings)
    if (s.frame == v.frame && s.verb_type == v.verb_type && s.voice == v.voice)
      same.push_back(&s);
  std::sort(same.begin(), same.end(),
            [](const ValencePattern* a, const ValencePattern* b) {
              if (a->count != b->count) return a->count > b->count;
              return serialize(*a) < serialize(*b);
            });
  for (std::size_t i = 0; i < same.size(); ++i)
    if (serialize(*same[i]) == serialize(v))
      return i == 0 ? base : base + "_" + std::to_string(i + 1);
  return base;
}

Grammar build_grammar(const SharedSet& shared,
                      const std::vector<std::string>& languages) {
  Grammar g;
  std::vector<ValencePattern> siblings;
  for (const SharedPattern& sp : shared.patterns) siblings.push_back(sp.pattern);

  std::set<std::string> cats;
  for (const SharedPattern& sp : shared.patterns) {
    const ValencePattern& v = sp.pattern;
    FrameFunction fn;
    fn.name = function_name(v, siblings);
    fn.frame = v.frame;
    fn.verb_arg = v.verb_type;
    fn.voice = v.voice;
    fn.fes = v.fes;
    for (const FETriple& t : v.fes) {
      std::string cat = fe_category(t.fe_name, t.cat);
      if (std::find(fn.args.begin(), fn.args.end(), cat) == fn.args.end())
        fn.args.push_back(cat);
    }
    std::sort(fn.args.begin(), fn.args.end());
    for (const std::string& a : fn.args) cats.insert(a);

    for (const std::string& lang : languages) {
      auto wit = sp.witnesses.find(lang);
      if (wit == sp.witnesses.end()) {
        g.ungenerable[lang].push_back(fn.name);
        continue;
      }
      const SentencePattern& w = wit->second;

      ConcreteRule rule;
      rule.function = fn.name;
      rule.verb_type = v.verb_type;
      rule.voice = v.voice;
      rule.args = fn.args;

      auto arg_of = [&](const FETriple& t) { return fe_category(t.fe_name, t.cat); };
      GrammRel subj_rel = v.voice == Voice::Act ? GrammRel::nsubj : GrammRel::nsubjpass;
      std::vector<const FETriple*> advs;
      const FETriple* dobj = nullptr;
      const FETriple* iobj = nullptr;
      const FETriple* clausal = nullptr;
      for (const FETriple& t : v.fes) {
        if (t.cat == PhraseCat::NP) {
          if (t.rel == subj_rel)
            rule.subject_arg = arg_of(t);
          else if (t.rel == GrammRel::iobj)
            iobj = &t;
          else if (v.voice == Voice::Pass && t.rel == GrammRel::dobj)
            rule.agent_arg = arg_of(t);  // demoted agent, "by"-phrase
          else
            dobj = &t;
        } else if (t.cat == PhraseCat::Adv) {
          advs.push_back(&t);
        } else {
          clausal = &t;
        }
      }

      using Kind = ComplementSlot::Kind;
      auto push = [&](Kind k, const FETriple* t, PhraseCat cat) {
        rule.complements.push_back({k, t ? arg_of(*t) : std::string{}, cat});
      };
      switch (v.verb_type) {
        case VerbType::V: break;
        case VerbType::V2:
          if (v.voice == Voice::Act) push(Kind::Obj, dobj, PhraseCat::NP);
          break;
        case VerbType::V3:
          if (v.voice == Voice::Act) push(Kind::Obj, dobj, PhraseCat::NP);
          push(Kind::IObj, iobj, PhraseCat::NP);
          break;
        case VerbType::VV: push(Kind::VComp, clausal, PhraseCat::VP); break;
        case VerbType::VS: push(Kind::SComp, clausal, PhraseCat::S); break;
        case VerbType::VQ: push(Kind::QComp, clausal, PhraseCat::QS); break;
        case VerbType::V2V:
          if (v.voice == Voice::Act) push(Kind::Obj, dobj, PhraseCat::NP);
          push(Kind::VComp, clausal, PhraseCat::VP);
          break;
        case VerbType::V2S:
          if (v.voice == Voice::Act) push(Kind::Obj, dobj, PhraseCat::NP);
          push(Kind::SComp, clausal, PhraseCat::S);
          break;
        case VerbType::V2Q:
          if (v.voice == Voice::Act) push(Kind::Obj, dobj, PhraseCat::NP);
          push(Kind::QComp, clausal, PhraseCat::QS);
          break;
      }

      // Adjunct order follows the witness sentence; leftovers alphabetical.
      std::vector<const FETriple*> ordered;
      for (const FERealization& fe : w.fes) {
        if (fe.cat != PhraseCat::Adv) continue;
        for (const FETriple* t : advs)
          if (t->fe_name == fe.fe_name &&
              std::find(ordered.begin(), ordered.end(), t) == ordered.end())
            ordered.push_back(t);
      }
      for (const FETriple* t : advs)
        if (std::find(ordered.begin(), ordered.end(), t) == ordered.end())
          ordered.push_back(t);
      for (const FETriple* t : ordered) push(Kind::Adv, t, PhraseCat::Adv);

      g.rules[lang].push_back(std::move(rule));
    }
    g.functions.push_back(std::move(fn));
  }
  g.categories.assign(cats.begin(), cats.end());
  return g;
}

std::string gen_abstract(const Grammar& g, const std::string& module_name) {
  std::ostringstream os;
  os << "abstract " << module_name << " = {\n\n";
  os << "  cat\n";
  os << "    Clause ;\n";
  for (const std::string& c : g.categories) os << "    " << c << " ;\n";
  os << "\n  fun\n";
  for (const FrameFunction& fn : g.functions) {
    os << "    " << fn.name << " : ";
    for (const std::string& a : fn.args) os << a << " -> ";
    os << to_string(fn.verb_arg) << " -> Clause ;\n";
  }
  os << "}\n";
  return os.str();
}

std::string gen_concrete(const Grammar& g, const std::string& language,
                         const std::string& module_name) {
  std::string suffix = capitalize(language);
  std::ostringstream os;
  os << "concrete " << module_name << suffix << " of " << module_name
     << " = open Syntax" << suffix << ", Paradigms" << suffix << " in {\n\n";
  os << "  lincat\n";
  os << "    Clause = { np : NP ; vp : VP } ;\n";
  for (const std::string& c : g.categories)
    os << "    " << c << " = Maybe " << to_string(arg_cat(c)) << " ;\n";
  os << "\n  lin\n";
  auto it = g.rules.find(language);
  if (it != g.rules.end()) {
    for (const ConcreteRule& r : it->second) {
      os << "    " << r.function;
      for (const std::string& a : r.args) os << " " << lower(a);
      os << " " << lower(to_string(r.verb_type)) << " = { np = "
         << maybe_expr(r.subject_arg, PhraseCat::NP) << " ; vp = ";

      std::string verb = lower(to_string(r.verb_type));
      if (r.voice == Voice::Pass) verb = "(passiveVP " + verb + ")";

      using Kind = ComplementSlot::Kind;
      std::vector<std::string> core;
      std::vector<std::string> adjuncts;
      if (r.voice == Voice::Pass && !r.agent_arg.empty())
        adjuncts.push_back("(mkAdv by8agent_Prep (" +
                           maybe_expr(r.agent_arg, PhraseCat::NP) + "))");
      for (const ComplementSlot& c : r.complements) {
        std::string e = "(" + maybe_expr(c.arg, c.cat) + ")";
        if (c.kind == Kind::Adv)
          adjuncts.push_back(e);
        else
          core.push_back(e);
      }
      // A bare passive verb is already a VP; adjuncts attach to it without
      // an extra wrapper, matching "mkVP (passiveVP v2) (mkAdv ...)".
      std::string expr;
      bool atomic;  // expr may be used as an mkVP argument verbatim
      if (r.voice == Voice::Pass && core.empty()) {
        expr = verb;
        atomic = true;
      } else {
        expr = "mkVP " + verb;
        for (const std::string& c : core) expr += " " + c;
        atomic = false;
      }
      for (const std::string& a : adjuncts) {
        expr = "mkVP " + (atomic ? expr : "(" + expr + ")") + " " + a;
        atomic = false;
      }
      os << expr << " } ;\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string signature_census_tsv(const SharedSet& shared) {
  std::map<std::string, int> census;
  for (const SharedPattern& sp : shared.patterns)
    ++census[syntactic_signature(sp.pattern).str()];
  std::vector<std::pair<std::string, int>> rows(census.begin(), census.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::ostringstream os;
  os << "signature\tpatterns\n";
  for (const auto& [sig, n] : rows) os << sig << "\t" << n << "\n";
  return os.str();
}

}  // namespace fnv
