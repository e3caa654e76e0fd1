#include "fsn/witnesses.hpp"

namespace fsn {

namespace {

struct Source {
  RuleId rule;
  const char* text;
};

const Source kSources[] = {
    {RuleId::BArrow, "assume u : p ;\n(fn x : p => x) u"},
    {RuleId::BPi1, "assume u : p ; assume v : q ;\n<u, v>.1"},
    {RuleId::BPi2, "assume u : p ; assume v : q ;\n<u, v>.2"},
    {RuleId::BCaseInl, "assume u : p ; assume f : q -> p ;\ncase inl u : p \\/ q of { x => x | y => f y }"},
    {RuleId::BCaseInr, "assume v : q ; assume g : p -> q ;\ncase inr v : p \\/ q of { x => g x | y => y }"},
    {RuleId::BUnpack,
     "assume u : p ; assume v : q ;\nunpack pack <p, <u, v>> : exists s. s /\\ q as <t, x> in x.2"},
    {RuleId::BTyApp, "(tfn t => fn x : t => x) [p]"},
    {RuleId::CEpsApp, "assume a : _|_ ; assume u : p ;\n(abort a : p -> q) u"},
    {RuleId::CEpsPi1, "assume a : _|_ ;\n(abort a : p /\\ q).1"},
    {RuleId::CEpsPi2, "assume a : _|_ ;\n(abort a : p /\\ q).2"},
    {RuleId::CEpsCase, "assume a : _|_ ; assume f : p -> q ;\ncase abort a : p \\/ q of { x => f x | y => y }"},
    {RuleId::CEpsEps, "assume a : _|_ ;\nabort (abort a : _|_) : p"},
    {RuleId::CCaseApp,
     "assume w : p \\/ q ; assume f : p -> q -> p ; assume g : q -> q -> p ; assume v : q ;\n"
     "(case w of { x => f x | y => g y }) v"},
    {RuleId::CCasePi1,
     "assume w : p \\/ q ; assume h : p -> p /\\ q ; assume k : q -> p /\\ q ;\n"
     "(case w of { x => h x | y => k y }).1"},
    {RuleId::CCasePi2,
     "assume w : p \\/ q ; assume h : p -> p /\\ q ; assume k : q -> p /\\ q ;\n"
     "(case w of { x => h x | y => k y }).2"},
    {RuleId::CCaseCase,
     "assume w : p \\/ q ; assume h : p -> p \\/ q ; assume k : q -> p \\/ q ; assume m : q -> p ;\n"
     "case case w of { x => h x | y => k y } of { x => x | y => m y }"},
    {RuleId::CCaseEps,
     "assume w : p \\/ q ; assume n : p -> _|_ ; assume o : q -> _|_ ;\n"
     "abort (case w of { x => n x | y => o y }) : p"},
    {RuleId::CCaseTyApp,
     "assume w : p \\/ q ; assume e : p -> forall r. r -> r ; assume d : q -> forall r. r -> r ;\n"
     "(case w of { x => e x | y => d y }) [p]"},
    {RuleId::CEpsTyApp, "assume a : _|_ ;\n(abort a : forall r. r -> r) [p]"},
    {RuleId::CUnpackTyApp,
     "assume m : exists s. s /\\ (forall r. r -> r) ;\n(unpack m as <t, x> in x.2) [p]"},
    {RuleId::CCaseUnpack,
     "assume w : p \\/ q ; assume i : p -> exists s. s /\\ q ; assume j : q -> exists s. s /\\ q ;\n"
     "unpack (case w of { x => i x | y => j y }) as <t, z> in z.2"},
    {RuleId::CEpsUnpack, "assume a : _|_ ;\nunpack (abort a : exists s. s /\\ q) as <t, z> in z.2"},
    {RuleId::CUnpackUnpack,
     "assume m : exists s. s /\\ (exists s. s /\\ q) ;\n"
     "unpack (unpack m as <t, x> in x.2) as <t2, z> in z.2"},
    {RuleId::CUnpackApp, "assume m : exists s. s /\\ (p -> q) ; assume u : p ;\n(unpack m as <t, x> in x.2) u"},
    {RuleId::CUnpackPi1, "assume m : exists s. s /\\ (p /\\ q) ;\n(unpack m as <t, x> in x.2).1"},
    {RuleId::CUnpackPi2, "assume m : exists s. s /\\ (p /\\ q) ;\n(unpack m as <t, x> in x.2).2"},
    {RuleId::CUnpackCase,
     "assume m : exists s. s /\\ (p \\/ q) ; assume j : q -> p ;\n"
     "case unpack m as <t, x> in x.2 of { y => y | z => j z }"},
    {RuleId::CUnpackEps, "assume m : exists s. s /\\ _|_ ;\nabort (unpack m as <t, x> in x.2) : p"},
};

}  // namespace

const std::vector<Witness>& witnesses() {
  static const std::vector<Witness> all = [] {
    std::vector<Witness> out;
    for (const auto& s : kSources) out.push_back({s.rule, s.text, parseProgram(s.text)});
    return out;
  }();
  return all;
}

}  // namespace fsn
