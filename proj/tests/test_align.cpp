#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "fnvalence/lexicon_align.hpp"

using namespace fnv;

namespace {

struct Lexicons {
  std::vector<LexEntry> eng, swe;
};

Lexicons sample_lexicons() {
  auto pipe = fixtures::run_sample_pipeline();
  Lexicons lx;
  lx.eng = collect_lexicon(pipe.shared, pipe.eng_patterns, "eng");
  lx.swe = collect_lexicon(pipe.shared, pipe.swe_patterns, "swe");
  auto eng_paradigms =
      load_paradigms({fixtures::data_path("paradigms_eng_base.tsv"),
                      fixtures::data_path("paradigms_eng_extra.tsv")});
  auto swe_paradigms =
      load_paradigms({fixtures::data_path("paradigms_swe_base.tsv"),
                      fixtures::data_path("paradigms_swe_extra.tsv")});
  gen_concrete_lexicon(lx.eng, eng_paradigms);
  gen_concrete_lexicon(lx.swe, swe_paradigms);
  return lx;
}

const AlignedEntry* find_aligned(const AlignmentResult& r, const std::string& id) {
  for (const AlignedEntry& a : r.aligned)
    if (a.interlingua_id == id) return &a;
  return nullptr;
}

}  // namespace

TEST_CASE("dictionary rows load into a lemma multimap") {
  std::istringstream tsv("want\tvilja\nwant\tönska\n");
  BilingualDict d = load_bilingual_dict(tsv);
  CHECK(d.count("want") == 2);
  CHECK(d.count("känna") == 0);
}

TEST_CASE("reference alignments from the sample corpora") {
  Lexicons lx = sample_lexicons();
  BilingualDict dict =
      load_bilingual_dict_file(fixtures::data_path("dict_eng_swe.tsv"));
  AlignmentResult r = align(lx.eng, lx.swe, dict);

  const AlignedEntry* want_vv = find_aligned(r, "want_VV_Desiring");
  REQUIRE(want_vv);
  REQUIRE(want_vv->l2_variants.size() == 1);
  CHECK(want_vv->l2_variants[0].id == "vilja_VV_Desiring");
  CHECK_FALSE(want_vv->fallback_used);

  // the MWE "feel like" has no dictionary row; its main verb does
  const AlignedEntry* fl_vv = find_aligned(r, "feel_like_VV_Desiring");
  REQUIRE(fl_vv);
  REQUIRE(fl_vv->l2_variants.size() == 1);
  CHECK(fl_vv->l2_variants[0].id == "känna_för_VV_Desiring");
  CHECK(fl_vv->fallback_used);

  const AlignedEntry* fl_v2 = find_aligned(r, "feel_like_V2_Desiring");
  REQUIRE(fl_v2);
  CHECK(fl_v2->l2_variants[0].id == "känna_för_V2_Desiring");

  // two Swedish candidates: the simple verb must precede the MWE
  const AlignedEntry* know = find_aligned(r, "know_V2_Familiarity");
  REQUIRE(know);
  REQUIRE(know->l2_variants.size() == 2);
  CHECK(know->l2_variants[0].id == "känna_V2_Familiarity");
  CHECK(know->l2_variants[1].id == "känna_till_V2_Familiarity");
}

TEST_CASE("unaligned entries carry a reason") {
  Lexicons lx = sample_lexicons();
  BilingualDict dict =
      load_bilingual_dict_file(fixtures::data_path("dict_eng_swe.tsv"));
  AlignmentResult r = align(lx.eng, lx.swe, dict);

  std::map<std::string, UnalignedReason> reasons;
  for (const auto& [e, why] : r.unaligned) reasons[e.id] = why;
  // the corpora evidence want as V but no Swedish Desiring V of that lemma
  REQUIRE(reasons.count("want_V_Desiring"));
  CHECK(reasons["want_V_Desiring"] == UnalignedReason::NoFrameTypeMatch);

  std::string tsv = unaligned_report_tsv(r);
  CHECK(tsv.find("want_V_Desiring\tNoFrameTypeMatch") != std::string::npos);
}

TEST_CASE("missing dictionary entry is distinguished from no match") {
  LexEntry a;
  a.id = "frob_V_Alpha";
  a.base_form = "frob";
  a.verb_type = VerbType::V;
  a.frame = "Alpha";
  a.lu_morph.base_form = "frob";
  a.lu_morph.components.push_back({"frob", "VERB", "Fin"});
  a.mwe_class = MweClass::Simple;
  a.linearization = "regV \"frob\"";
  AlignmentResult r = align({a}, {}, {});
  REQUIRE(r.unaligned.size() == 1);
  CHECK(r.unaligned[0].second == UnalignedReason::NoDictEntry);
}

TEST_CASE("unlinearized targets cannot be aligned") {
  Lexicons lx = sample_lexicons();
  for (LexEntry& e : lx.swe) e.linearization.reset();
  BilingualDict dict =
      load_bilingual_dict_file(fixtures::data_path("dict_eng_swe.tsv"));
  AlignmentResult r = align(lx.eng, lx.swe, dict);
  CHECK(r.aligned.empty());
  bool saw = false;
  for (const auto& [e, why] : r.unaligned)
    if (e.id == "want_VV_Desiring") {
      saw = true;
      CHECK(why == UnalignedReason::TargetUnlinearized);
    }
  CHECK(saw);
}

TEST_CASE("shared lexicon modules use variants for multiple candidates") {
  Lexicons lx = sample_lexicons();
  BilingualDict dict =
      load_bilingual_dict_file(fixtures::data_path("dict_eng_swe.tsv"));
  AlignmentResult r = align(lx.eng, lx.swe, dict);
  SharedLexiconText text = gen_shared_lexicon(r.aligned, "SharedLexicon", "eng", "swe");
  CHECK(text.abstract_module.find("know_V2_Familiarity : V2 ;") != std::string::npos);
  CHECK(text.l1_concrete.find("know_V2_Familiarity = know_V2_Familiarity ;") !=
        std::string::npos);
  CHECK(text.l2_concrete.find(
            "know_V2_Familiarity = variants {känna_V2_Familiarity | "
            "känna_till_V2_Familiarity} ;") != std::string::npos);
  CHECK(text.l2_concrete.find("want_VV_Desiring = vilja_VV_Desiring ;") !=
        std::string::npos);
}
