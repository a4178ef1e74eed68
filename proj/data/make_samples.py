#!/usr/bin/env python3
"""Regenerates the bundled sample corpora (sample_eng.xml, sample_swe.xml).

English sentences carry phrase-structure annotation layers with inclusive
character offsets; Swedish sentences carry dependency-annotated tokens.
Offsets are computed here so the XML never goes stale by hand-editing.
"""
import os
from xml.sax.saxutils import escape

HERE = os.path.dirname(os.path.abspath(__file__))


def span(text, phrase, from_=0):
    i = text.index(phrase, from_)
    return i, i + len(phrase) - 1


# (id, frame, luName, text, targets[(word, bnc)], fes[(name, phrase, gf, pt)])
ENG = [
    ("e1", "Desiring", "want.v", "you want one",
     [("want", "VVB")],
     [("Experiencer", "you", "Ext", "NP"),
      ("Focal_participant", "one", "Obj", "NP")]),
    ("e2", "Desiring", "want.v", "I want to know",
     [("want", "VVB")],
     [("Experiencer", "I", "Ext", "NP"),
      ("Event", "to know", "Obj", "VPto")]),
    ("e3", "Desiring", "want.v", "he wanted more",
     [("wanted", "VVD")],
     [("Experiencer", "he", "Ext", "NP"),
      ("Focal_participant", "more", "Dep", "AVP")]),
    ("e4", "Desiring", "feel_like.v", "I feel like a glass",
     [("feel", "VVB"), ("like", "PRP")],
     [("Experiencer", "I", "Ext", "NP"),
      ("Focal_participant", "a glass", "Obj", "NP")]),
    ("e5", "Desiring", "feel_like.v", "I felt like shouting",
     [("felt", "VVD"), ("like", "PRP")],
     [("Experiencer", "I", "Ext", "NP"),
      ("Event", "shouting", "Obj", "VPing")]),
    ("e6", "Desiring", "yearn.v", "he would yearn for England",
     [("yearn", "VVI")],
     [("Experiencer", "he", "Ext", "NP"),
      ("Focal_participant", "for England", "Dep", "PP[for]")]),
    ("e7", "Desiring", "yearn.v", "he yearned to phone Liz",
     [("yearned", "VVD")],
     [("Experiencer", "he", "Ext", "NP"),
      ("Event", "to phone Liz", "Obj", "VPto")]),
    ("e8", "Desiring", "want.v", "a protector is wanted by her",
     [("wanted", "VVN")],
     [("Focal_participant", "a protector", "Ext", "NP"),
      ("Experiencer", "her", "Obj", "NP")]),
    ("e9", "Feeling", "feel.v", "she feels tired",
     [("feels", "VVZ")],
     [("Experiencer", "she", "Ext", "NP"),
      ("Emotional_state", "tired", "Dep", "AJP")]),
    ("e10", "Familiarity", "know.v", "she knows the city",
     [("knows", "VVZ")],
     [("Cognizer", "she", "Ext", "NP"),
      ("Entity", "the city", "Obj", "NP")]),
    ("e11", "Awareness", "know.v", "they know the truth",
     [("know", "VVB")],
     [("Cognizer", "they", "Ext", "NP"),
      ("Content", "the truth", "Obj", "NP")]),
    ("e12", "Residence", "live.v", "we live in Sweden",
     [("live", "VVB")],
     [("Resident", "we", "Ext", "NP"),
      ("Location", "in Sweden", "Dep", "PP[in]")]),
    ("e13", "Motion", "go.v", "we go to a museum",
     [("go", "VVB")],
     [("Theme", "we", "Ext", "NP"),
      ("Goal", "to a museum", "Dep", "PP[to]")]),
    ("e14", "Motion", "go.v", "they go from Lund to Malmo",
     [("go", "VVB")],
     [("Theme", "they", "Ext", "NP"),
      ("Source", "from Lund", "Dep", "PP[from]"),
      ("Goal", "to Malmo", "Dep", "PP[to]")]),
    ("e15", "Possession", "have.v", "she has a car",
     [("has", "VHZ")],
     [("Owner", "she", "Ext", "NP"),
      ("Possession", "a car", "Obj", "NP")]),
    ("e16", "Create_physical_artwork", "paint.v",
     "Bacchus was painted by Leonardo da Vinci",
     [("painted", "VVN")],
     [("Representation", "Bacchus", "Ext", "NP"),
      ("Creator", "Leonardo da Vinci", "Obj", "NP")]),
    ("e17", "Breathing", "exhale.v", "he exhaled slowly",
     [("exhaled", "VVD")],
     [("Agent", "he", "Ext", "NP"),
      ("Manner", "slowly", "Dep", "AVP")]),
]


def gen_eng(path):
    lines = ['<?xml version="1.0" encoding="UTF-8"?>', "<corpus>", "<documents>"]
    for sid, frame, lu, text, targets, fes in ENG:
        lines.append('<sentence ID="%s" frame="%s" luName="%s">' % (sid, frame, lu))
        lines.append("  <text>%s</text>" % escape(text))
        lines.append("  <annotationSet>")
        lines.append('    <layer name="Target">')
        tspans = []
        at = 0
        for word, _ in targets:
            s, e = span(text, word, at)
            tspans.append((s, e))
            at = e + 1
        for s, e in tspans:
            lines.append('      <label name="Target" start="%d" end="%d"/>' % (s, e))
        lines.append("    </layer>")
        lines.append('    <layer name="BNC">')
        for (s, e), (_, tag) in zip(tspans, targets):
            lines.append('      <label name="%s" start="%d" end="%d"/>' % (tag, s, e))
        lines.append("    </layer>")
        for layer, col in (("FE", 0), ("GF", 2), ("PT", 3)):
            lines.append('    <layer name="%s">' % layer)
            for fe in fes:
                s, e = span(text, fe[1])
                name = fe[0] if layer == "FE" else fe[col]
                lines.append('      <label name="%s" start="%d" end="%d"/>'
                             % (escape(name), s, e))
            lines.append("    </layer>")
        lines.append("  </annotationSet>")
        lines.append("</sentence>")
    lines += ["</documents>", "</corpus>", ""]
    with open(path, "w", encoding="utf-8") as f:
        f.write("\n".join(lines))


# Swedish: (id, frame, luName, groups)
# group = (element_name_or_None, [(word, pos, msd, ref, dephead, deprel)])
SWE = [
    ("s1", "Desiring", "vilja",
     [("Experiencer", [("jag", "PN", "PN.UTR.SIN.DEF.SUB", 1, 2, "SS")]),
      ("LU", [("vill", "VB", "VB.PRS.AKT", 2, None, "ROOT")]),
      ("Event", [("ha", "VB", "VB.INF.AKT", 3, 2, "VG"),
                 ("sju", "RG", "RG.NOM", 4, 5, "DT"),
                 ("sångare", "NN", "NN.UTR.PLU.IND.NOM", 5, 3, "OO")])]),
    ("s2", "Desiring", "känna_för",
     [("Experiencer", [("jag", "PN", "PN.UTR.SIN.DEF.SUB", 1, 2, "SS")]),
      ("LU", [("känner", "VB", "VB.PRS.AKT", 2, None, "ROOT"),
              ("för", "PL", "PL", 3, 2, "PL")]),
      ("Event", [("att", "IE", "IE", 4, 5, "IM"),
                 ("skriva", "VB", "VB.INF.AKT", 5, 2, "VG"),
                 ("en", "DT", "DT.UTR.SIN.IND", 6, 7, "DT"),
                 ("bok", "NN", "NN.UTR.SIN.IND.NOM", 7, 5, "OO")])]),
    ("s3", "Desiring", "känna_för",
     [("Experiencer", [("jag", "PN", "PN.UTR.SIN.DEF.SUB", 1, 2, "SS")]),
      ("LU", [("känner", "VB", "VB.PRS.AKT", 2, None, "ROOT"),
              ("för", "PL", "PL", 3, 2, "PL")]),
      ("Focal_participant", [("en", "DT", "DT.UTR.SIN.IND", 4, 5, "DT"),
                             ("tur", "NN", "NN.UTR.SIN.IND.NOM", 5, 3, "OO")])]),
    ("s4", "Desiring", "längta",
     [("Experiencer", [("Roberte", "PM", "PM.NOM", 1, 2, "SS")]),
      ("LU", [("längtade", "VB", "VB.PRT.AKT", 2, None, "ROOT")]),
      ("Focal_participant", [("hem", "AB", "AB", 3, 2, "RA")])]),
    ("s5", "Feeling", "känna_sig",
     [("Experiencer", [("man", "PN", "PN.UTR.SIN.IND.SUB", 1, 2, "SS")]),
      ("LU", [("känner", "VB", "VB.PRS.AKT", 2, None, "ROOT"),
              ("sig", "PN", "PN.UTR.SIN.DEF.OBJ", 3, 2, "OO")]),
      ("Emotional_state", [("trygg", "JJ", "JJ.POS.UTR.SIN.IND.NOM", 4, 2, "SP")])]),
    ("s6", "Familiarity", "känna",
     [("Cognizer", [("hon", "PN", "PN.UTR.SIN.DEF.SUB", 1, 2, "SS")]),
      ("LU", [("känner", "VB", "VB.PRS.AKT", 2, None, "ROOT")]),
      ("Entity", [("staden", "NN", "NN.UTR.SIN.DEF.NOM", 3, 2, "OO")])]),
    ("s7", "Familiarity", "känna_till",
     [("Cognizer", [("vi", "PN", "PN.UTR.PLU.DEF.SUB", 1, 2, "SS")]),
      ("LU", [("känner", "VB", "VB.PRS.AKT", 2, None, "ROOT"),
              ("till", "PL", "PL", 3, 2, "PL")]),
      ("Entity", [("staden", "NN", "NN.UTR.SIN.DEF.NOM", 4, 2, "OO")])]),
    ("s8", "Awareness", "känna",
     [("Cognizer", [("han", "PN", "PN.UTR.SIN.DEF.SUB", 1, 2, "SS")]),
      ("LU", [("känner", "VB", "VB.PRS.AKT", 2, None, "ROOT")]),
      ("Content", [("sanningen", "NN", "NN.UTR.SIN.DEF.NOM", 3, 2, "OO")])]),
    ("s9", "Residence", "bo",
     [("Resident", [("vi", "PN", "PN.UTR.PLU.DEF.SUB", 1, 2, "SS")]),
      ("LU", [("bor", "VB", "VB.PRS.AKT", 2, None, "ROOT")]),
      ("Location", [("i", "PP", "PP", 3, 2, "RA"),
                    ("Sverige", "PM", "PM.NOM", 4, 3, "PA")])]),
    ("s10", "Motion", "gå",
     [("Theme", [("vi", "PN", "PN.UTR.PLU.DEF.SUB", 1, 2, "SS")]),
      ("LU", [("går", "VB", "VB.PRS.AKT", 2, None, "ROOT")]),
      ("Goal", [("till", "PP", "PP", 3, 2, "RA"),
                ("ett", "DT", "DT.NEU.SIN.IND", 4, 5, "DT"),
                ("museum", "NN", "NN.NEU.SIN.IND.NOM", 5, 3, "PA")])]),
    ("s11", "Motion", "gå",
     [("Theme", [("de", "PN", "PN.UTR.PLU.DEF.SUB", 1, 2, "SS")]),
      ("LU", [("går", "VB", "VB.PRS.AKT", 2, None, "ROOT")]),
      ("Source", [("från", "PP", "PP", 3, 2, "RA"),
                  ("Lund", "PM", "PM.NOM", 4, 3, "PA")]),
      ("Goal", [("till", "PP", "PP", 5, 2, "RA"),
                ("Malmö", "PM", "PM.NOM", 6, 5, "PA")])]),
    ("s12", "Possession", "ha",
     [("Owner", [("hon", "PN", "PN.UTR.SIN.DEF.SUB", 1, 2, "SS")]),
      ("LU", [("har", "VB", "VB.PRS.AKT", 2, None, "ROOT")]),
      ("Possession", [("en", "DT", "DT.UTR.SIN.IND", 3, 4, "DT"),
                      ("bil", "NN", "NN.UTR.SIN.IND.NOM", 4, 2, "OO")])]),
    ("s13", "Create_physical_artwork", "måla",
     [("Representation", [("Bacchus", "PM", "PM.NOM", 1, 2, "SS")]),
      ("LU", [("målades", "VB", "VB.PRT.SFO", 2, None, "ROOT")]),
      (None, [("av", "PP", "PP", 3, 2, "AG")]),
      ("Creator", [("Leonardo", "PM", "PM.NOM", 4, 3, "OO")])]),
    ("s14", "Breathing", "andas_in",
     [("Agent", [("hon", "PN", "PN.UTR.SIN.DEF.SUB", 1, 2, "SS")]),
      ("LU", [("andas", "VB", "VB.PRS.AKT", 2, None, "ROOT"),
              ("in", "PL", "PL", 3, 2, "PL")]),
      ("Manner", [("djupt", "AB", "AB", 4, 2, "RA")])]),
    ("s15", "Desiring", "önska",
     [("Focal_participant", [("en", "DT", "DT.UTR.SIN.IND", 1, 2, "DT"),
                             ("beskyddare", "NN", "NN.UTR.SIN.IND.NOM", 2, 3, "SS")]),
      ("LU", [("önskas", "VB", "VB.PRS.SFO", 3, None, "ROOT")]),
      (None, [("av", "PP", "PP", 4, 3, "AG")]),
      ("Experiencer", [("henne", "PN", "PN.UTR.SIN.DEF.OBJ", 5, 4, "OO")])]),
    ("s16", "Desiring", "önska",
     [("Experiencer", [("vi", "PN", "PN.UTR.PLU.DEF.SUB", 1, 2, "SS")]),
      ("LU", [("önskar", "VB", "VB.PRS.AKT", 2, None, "ROOT")]),
      ("Focal_participant", [("högre", "JJ", "JJ.KOM.UTR.SIN.IND.NOM", 3, 4, "AT"),
                             ("priser", "NN", "NN.UTR.PLU.IND.NOM", 4, 2, "OO")])]),
]


def gen_swe(path):
    lines = ['<?xml version="1.0" encoding="UTF-8"?>', "<corpus>", "<sentences>"]
    for sid, frame, lu, groups in SWE:
        lines.append('<sentence id="%s" frame="%s" luName="%s">' % (sid, frame, lu))
        for ename, words in groups:
            indent = "  "
            if ename is not None:
                lines.append('  <element name="%s">' % ename)
                indent = "    "
            for word, pos, msd, ref, dephead, deprel in words:
                attrs = 'pos="%s" msd="%s" ref="%d"' % (pos, msd, ref)
                if dephead is not None:
                    attrs += ' dephead="%d"' % dephead
                attrs += ' deprel="%s"' % deprel
                lines.append("%s<w %s>%s</w>" % (indent, attrs, escape(word)))
            if ename is not None:
                lines.append("  </element>")
        lines.append("</sentence>")
    lines += ["</sentences>", "</corpus>", ""]
    with open(path, "w", encoding="utf-8") as f:
        f.write("\n".join(lines))


if __name__ == "__main__":
    gen_eng(os.path.join(HERE, "sample_eng.xml"))
    gen_swe(os.path.join(HERE, "sample_swe.xml"))
    print("wrote sample_eng.xml, sample_swe.xml")
