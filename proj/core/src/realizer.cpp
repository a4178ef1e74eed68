#include "fnvalence/realizer.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fnv {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool ends_with(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

bool vowel(char c) { return std::string("aeiou").find(c) != std::string::npos; }

// English 3sg present: want -> wants, carry -> carries, pass -> passes.
std::string eng_sg3(const std::string& v) {
  if (v.empty()) return v;
  if (ends_with(v, "s") || ends_with(v, "x") || ends_with(v, "z") ||
      ends_with(v, "ch") || ends_with(v, "sh") || ends_with(v, "o"))
    return v + "es";
  if (ends_with(v, "y") && v.size() > 1 && !vowel(v[v.size() - 2]))
    return v.substr(0, v.size() - 1) + "ies";
  return v + "s";
}

// English regular past: paint -> painted, live -> lived, carry -> carried.
std::string eng_past(const std::string& v) {
  if (v.empty()) return v;
  if (ends_with(v, "e")) return v + "d";
  if (ends_with(v, "y") && v.size() > 1 && !vowel(v[v.size() - 2]))
    return v.substr(0, v.size() - 1) + "ied";
  return v + "ed";
}

// Swedish present from the infinitive: känna -> känner, bo -> bor.
std::string swe_pres(const std::string& inf) {
  // Short verbs like "ha" and "gå" just add -r; longer a-stems shift to -er.
  if (inf.size() > 3 && ends_with(inf, "a"))
    return inf.substr(0, inf.size() - 1) + "er";
  return inf + "r";
}

std::string be_form(Tense t, const Agr& agr) {
  if (t == Tense::Past)
    return agr.number == Number::Pl || agr.person == Person::P2 ? "were" : "was";
  if (agr.number == Number::Pl || agr.person == Person::P2) return "are";
  return agr.person == Person::P1 ? "am" : "is";
}

void append(std::string& s, const std::string& part) {
  if (part.empty()) return;
  if (!s.empty()) s += " ";
  s += part;
}

}  // namespace

VerbForms make_verb(const ParadigmRef& paradigm, const LuMorph& morph,
                    const std::string& language) {
  VerbForms f;
  f.language = language;
  std::vector<std::string> a = paradigm.argument_forms;
  if (a.empty())
    // Bare constructor row: derive everything from the citation form.
    a.push_back(morph.components.empty() ? morph.base_form
                                         : morph.components[0].text);
  auto form = [&](std::size_t i) { return i < a.size() ? a[i] : std::string{}; };

  if (language == "eng") {
    if (paradigm.constructor == "irregV" && a.size() >= 3) {
      f.inf = form(0);
      f.past = form(1);
      f.past_part = form(2);
      f.pres_sg3 = eng_sg3(f.inf);
    } else if (paradigm.constructor == "mkV" && a.size() >= 5) {
      f.inf = form(0);
      f.pres_sg3 = form(1);
      f.past = form(2);
      f.past_part = form(3);
    } else {  // regV lemma or single-form mkV
      f.inf = form(0);
      f.pres_sg3 = eng_sg3(f.inf);
      f.past = eng_past(f.inf);
      f.past_part = f.past;
    }
    f.pres_plain = f.inf;
  } else {  // Swedish: one present form per tense, no person agreement
    if (paradigm.constructor == "irregV" && a.size() >= 3) {
      f.inf = form(0);
      f.past = form(1);
      f.past_part = form(2);  // supine
      f.pres_plain = swe_pres(f.inf);
    } else if (paradigm.constructor == "mkV" && a.size() >= 6) {
      f.inf = form(0);
      f.pres_plain = form(1);
      f.past = form(3);
      f.past_part = form(4);
    } else {
      // single present-tense form: längtar -> längta/längtade/längtat
      std::string pres = form(0);
      f.pres_plain = pres;
      if (ends_with(pres, "ar")) {
        std::string stem = pres.substr(0, pres.size() - 2);
        f.inf = stem + "a";
        f.past = stem + "ade";
        f.past_part = stem + "at";
      } else if (ends_with(pres, "er")) {
        std::string stem = pres.substr(0, pres.size() - 2);
        f.inf = stem + "a";
        f.past = stem + "de";
        f.past_part = stem + "t";
      } else {
        f.inf = pres;
        f.past = pres + "de";
        f.past_part = pres + "t";
      }
    }
    f.pres_sg3 = f.pres_plain;
  }

  for (std::size_t i = 1; i < morph.components.size(); ++i)
    append(f.particle, morph.components[i].text);
  return f;
}

Phrase make_np(const std::string& surface) {
  Phrase p{PhraseCat::NP, surface, {}, nullptr};
  std::string head = lower(surface.substr(0, surface.find(' ')));
  if (head == "i" || head == "jag") p.agr = {Person::P1, Number::Sg};
  else if (head == "we" || head == "vi") p.agr = {Person::P1, Number::Pl};
  else if (head == "you" || head == "du" || head == "ni") p.agr = {Person::P2, Number::Sg};
  else if (head == "they" || head == "de") p.agr = {Person::P3, Number::Pl};
  else p.agr = {Person::P3, Number::Sg};
  return p;
}

Phrase make_adv(const std::string& surface) {
  return Phrase{PhraseCat::Adv, surface, {}, nullptr};
}

Phrase make_phrase(PhraseCat cat, const std::string& surface) {
  if (cat == PhraseCat::NP) return make_np(surface);
  return Phrase{cat, surface, {}, nullptr};
}

Phrase from_maybe(const MaybePhrase& m, PhraseCat cat) {
  if (m) return *m;
  return Phrase{cat, "", {}, nullptr};  // the empty phrase of that category
}

std::string VPhrase::render_finite(Tense t, const Agr& agr) const {
  std::string out;
  bool swedish = verb.language == "swe";
  if (voice == Voice::Pass) {
    if (swedish) {
      // morphological s-passive builds on the infinitive in the present
      append(out, (t == Tense::Pres ? verb.inf : verb.past) + "s");
    } else {
      append(out, be_form(t, agr));
      append(out, verb.past_part);
    }
    append(out, verb.particle);
  } else {
    if (t == Tense::Past)
      append(out, verb.past);
    else if (!swedish && agr.person == Person::P3 && agr.number == Number::Sg)
      append(out, verb.pres_sg3);
    else
      append(out, verb.pres_plain);
    append(out, verb.particle);
  }
  for (const std::string& c : comps) append(out, c);
  if (vcomp) {
    std::string inner = vcomp->vp ? vcomp->vp->render_infinitive() : vcomp->surface;
    if (!inner.empty()) append(out, (swedish ? "att " : "to ") + inner);
  }
  for (const std::string& a : advs) append(out, a);
  return out;
}

std::string VPhrase::render_infinitive() const {
  std::string out;
  append(out, verb.inf);
  append(out, verb.particle);
  for (const std::string& c : comps) append(out, c);
  if (vcomp) {
    std::string inner = vcomp->vp ? vcomp->vp->render_infinitive() : vcomp->surface;
    if (!inner.empty())
      append(out, (verb.language == "swe" ? "att " : "to ") + inner);
  }
  for (const std::string& a : advs) append(out, a);
  return out;
}

Clause apply_frame_function(const ConcreteRule& rule,
                            const std::map<std::string, MaybePhrase>& args,
                            const VerbForms& verb) {
  auto arg = [&](const std::string& name, PhraseCat cat) {
    auto it = args.find(name);
    return from_maybe(it == args.end() ? MaybePhrase{} : it->second, cat);
  };

  Clause c;
  c.np = rule.subject_arg.empty() ? Phrase{PhraseCat::NP, "", {}, nullptr}
                                  : arg(rule.subject_arg, PhraseCat::NP);
  c.vp.verb = verb;
  c.vp.voice = rule.voice;

  if (rule.voice == Voice::Pass && !rule.agent_arg.empty()) {
    Phrase agent = arg(rule.agent_arg, PhraseCat::NP);
    if (!agent.surface.empty())
      c.vp.advs.push_back((verb.language == "swe" ? "av " : "by ") + agent.surface);
  }
  using Kind = ComplementSlot::Kind;
  for (const ComplementSlot& slot : rule.complements) {
    Phrase p = slot.arg.empty() ? from_maybe({}, slot.cat) : arg(slot.arg, slot.cat);
    switch (slot.kind) {
      case Kind::VComp:
        c.vp.vcomp = std::make_shared<Phrase>(std::move(p));
        break;
      case Kind::Adv:
        if (!p.surface.empty()) c.vp.advs.push_back(p.surface);
        break;
      default:
        if (!p.surface.empty()) c.vp.comps.push_back(p.surface);
        break;
    }
  }
  return c;
}

std::string combine(const Clause& c, Tense tense, const std::vector<Phrase>& adjuncts) {
  std::string out = c.np.surface;
  append(out, c.vp.render_finite(tense, c.np.agr));
  for (const Phrase& a : adjuncts) append(out, a.surface);
  return normalize_ws(out);
}

std::string normalize_ws(const std::string& s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = !out.empty();
    } else {
      if (space) out += ' ';
      out += c;
      space = false;
    }
  }
  return out;
}

}  // namespace fnv
