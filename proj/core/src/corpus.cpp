#include "conebvp/config.hpp"

namespace conebvp {

namespace {

ProblemConfig second_order(const std::string& B) {
  ProblemConfig cfg;
  cfg.n = 2;
  cfg.k = 1;
  cfg.drift = B;
  return cfg;
}

void set_f1(ProblemConfig& cfg) {
  cfg.branches = {
      {"1/28", "(1007/88 + 225/88*t) * (50000000/1190651) * u"},
      {"14", "(1007/88 + 225/88*t) * 3125000 / (58341899*u)"},
      {"", "(1007/88 + 225/88*t) * 3125000 / (58341899*u) + (10000/43)*(u-14)*u"},
  };
  cfg.p = "1/28";
  cfg.q = "7/2";
  cfg.r = "15";
  cfg.theorem = "thm5";
}

void set_f2(ProblemConfig& cfg) {
  cfg.branches = {
      {"16", "12*(31/28*t + 25/28)*u^3"},
      {"", "49152*(31/28*t + 25/28)"},
  };
  cfg.p = "1/2";
  cfg.q = "4";
  cfg.r = "16384";
  cfg.theorem = "thm6";
}

std::vector<CorpusEntry> make_corpus() {
  std::vector<CorpusEntry> out;
  const std::array<std::pair<std::string, std::string>, 4> drifts = {{
      {"-2*pi", "-2pi"},
      {"0", "B0"},
      {"log(5^(1/2)-2)", "Bneg"},
      {"log(2+5^(1/2))", "Bpos"},
  }};

  // F1 under the two-solution family
  for (const auto& [B, tag] : drifts) {
    CorpusEntry e;
    ProblemConfig cfg = second_order(B);
    set_f1(cfg);
    e.config = cfg;
    if (tag == "-2pi") {
      e.name = "F1-thm5.7";
      e.description = "second order, B = -2*pi, two-solution thresholds";
    } else if (tag == "B0") {
      e.name = "F1-thm5.3";
      e.description = "second order, B = 0, two-solution thresholds";
    } else if (tag == "Bneg") {
      e.name = "F1-thm5Bneg";
      e.description = "second order, B = log(sqrt(5)-2), two-solution thresholds";
    } else {
      e.name = "F1-thm5B";
      e.description = "second order, B = log(2+sqrt(5)), two-solution thresholds";
    }
    out.push_back(std::move(e));
  }

  // F2 under the three-solution family
  for (const auto& [B, tag] : drifts) {
    CorpusEntry e;
    ProblemConfig cfg = second_order(B);
    set_f2(cfg);
    e.config = cfg;
    if (tag == "-2pi") {
      e.name = "F2-thm5.8";
      e.description = "second order, B = -2*pi, three-solution thresholds";
    } else if (tag == "B0") {
      e.name = "F2-thm5.4";
      e.description = "second order, B = 0, three-solution thresholds";
    } else if (tag == "Bneg") {
      e.name = "F2-thm6Bneg";
      e.description = "second order, B = log(sqrt(5)-2), three-solution thresholds";
    } else {
      e.name = "F2-thm6B";
      e.description = "second order, B = log(2+sqrt(5)), three-solution thresholds";
    }
    out.push_back(std::move(e));
  }

  {
    CorpusEntry e;
    e.name = "fourth-thm5";
    e.description = "clamped beam, two-solution thresholds";
    ProblemConfig cfg;
    cfg.n = 4;
    cfg.k = 2;
    cfg.branches = {
        {"1/36", "1296*t"},
        {"33/4", "t/u^2"},
        {"", "(64*t/35937)*(u-29/4)^5*u"},
    };
    cfg.p = "1/16";
    cfg.q = "11/3";
    cfg.r = "27";
    cfg.theorem = "thm5";
    e.config = cfg;
    out.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "fourth-thm6";
    e.description = "clamped beam, three-solution thresholds";
    ProblemConfig cfg;
    cfg.n = 4;
    cfg.k = 2;
    // last branch is the continuous extension of the middle one at u = 14
    cfg.branches = {
        {"1/2", "(2+3*t)*u^2"},
        {"14", "(u-1/2)*u^4 + (2+3*t)*u^2"},
        {"", "518616 + (2+3*t)*196"},
    };
    cfg.p = "1/2";
    cfg.q = "56/9";
    cfg.r = "1444";
    cfg.theorem = "thm6";
    e.config = cfg;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = make_corpus();
  return corpus;
}

const CorpusEntry* find_corpus_entry(const std::string& name) {
  for (const auto& e : builtin_corpus())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace conebvp
