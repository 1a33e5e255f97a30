// Acceptance suite: one PASS/FAIL line per criterion, details indented
// below it. Exit status is nonzero if any criterion fails.
//
//   acceptance [--fast]     --fast replays the streaming check at scale 0

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dynamik/classify.hpp"
#include "dynamik/export.hpp"
#include "dynamik/metrics.hpp"
#include "dynamik/replay.hpp"
#include "dynamik/scheduler.hpp"
#include "dynamik/style.hpp"
#include "dynamik/tokenize.hpp"
#include "json.hpp"
#include "subtitle_parsers.hpp"
#include "test_support.hpp"

using namespace dynamik;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void fail(std::string why) {
    pass = false;
    details.push_back("FAILED: " + std::move(why));
  }
  void note(std::string what) { details.push_back(std::move(what)); }
};

int failures = 0;

void report(const std::string& name, const Outcome& o) {
  std::cout << (o.pass ? "PASS  " : "FAIL  ") << name << '\n';
  for (const auto& d : o.details) std::cout << "        " << d << '\n';
  failures += !o.pass;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0, double e = 0, double g = 0,
                double h = 0, double i = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d, e, g, h, i);
  return buf;
}

// ---------------------------------------------------------------------------

struct PublishedRow {
  int total, content, function, density;
};
// Clip information table: words, content words, function words, density %.
constexpr PublishedRow kPublished[6] = {
    {84, 50, 34, 60}, {70, 38, 32, 54}, {90, 53, 37, 59}, {60, 35, 25, 58}, {79, 50, 29, 63}, {52, 32, 20, 62},
};

Outcome corpus_table() {
  Outcome o;
  std::vector<std::string> args{"metrics"};
  for (int i = 1; i <= 6; ++i) args.push_back(testing::data_path("news/news" + std::to_string(i) + ".txt"));

  std::ostringstream out, err;
  const auto t0 = Clock::now();
  const int status = cli::run(args, out, err);
  const double elapsed = ms_since(t0);
  if (status != 0) {
    o.fail("metrics exited with " + std::to_string(status) + ": " + err.str());
    return o;
  }

  const auto lines = testing::split_lines(out.str());
  if (lines.size() != 6) {
    o.fail("expected 6 reports, got " + std::to_string(lines.size()));
    return o;
  }
  for (int i = 0; i < 6; ++i) {
    const auto j = nlohmann::json::parse(lines[i]);
    const int total = j["total_words"], content = j["content_words"], function = j["function_words"];
    const double density = j["lexical_density_pct"];
    const auto& p = kPublished[i];
    const bool ok = std::abs(total - p.total) <= 3 && std::abs(content - p.content) <= 3 &&
                    std::abs(function - p.function) <= 3 && std::abs(density - p.density) <= 3.0;
    std::ostringstream line_os;
    line_os << "News " << i + 1 << ": measured " << total << '/' << content << '/' << function << '/'
            << fmt("%.1f", density) << "%  published " << p.total << '/' << p.content << '/' << p.function << '/'
            << p.density << '%';
    const auto line = line_os.str();
    if (ok)
      o.note("ok      " + line);
    else
      o.fail(line);
  }
  if (elapsed >= 1000.0)
    o.fail(fmt("runtime %.1f ms (limit 1000 ms)", elapsed));
  else
    o.note(fmt("runtime %.1f ms", elapsed));
  return o;
}

Outcome function_share() {
  Outcome o;
  std::size_t function = 0, total = 0;
  for (int i = 1; i <= 6; ++i) {
    const auto r = density_report(classify_tokens(tokenize(testing::news(i)), Lexicon::builtin()), default_style());
    function += r.function_words;
    total += r.total_words;
  }
  const double share = static_cast<double>(function) / static_cast<double>(total);
  const auto line = fmt("function-word share %.4f (%.0f of %.0f words), target 0.40 +/- 0.06", share,
                        static_cast<double>(function), static_cast<double>(total));
  if (std::abs(share - 0.40) <= 0.06)
    o.note(line);
  else
    o.fail(line);
  return o;
}

Outcome area_arithmetic() {
  Outcome o;
  struct Case {
    int exponent;
    double exact;
    const char* printed;
  };
  // 0.6 + 0.4*(2/3) = 13/15 and 0.6 + 0.4*(4/9) = 7/9. The targets 0.8667
  // and 0.7778 are these values rounded to four places, so the 1e-9 bound
  // is checked against the exact fractions and the rounding separately.
  for (const Case c : {Case{1, 13.0 / 15.0, "0.8667"}, Case{2, 7.0 / 9.0, "0.7778"}}) {
    const double got = area_ratio(0.4, 2.0 / 3.0, c.exponent);
    char rounded[16];
    std::snprintf(rounded, sizeof rounded, "%.4f", got);
    const bool ok = std::abs(got - c.exact) <= 1e-9 && std::string(rounded) == c.printed;
    const auto line = fmt("area_ratio(0.4, 2/3, %.0f) = %.12f", c.exponent, got) + " -> " + rounded +
                      " (expected " + c.printed + ")";
    if (ok)
      o.note(line);
    else
      o.fail(line);
  }
  o.note("documented: the 80% length claim vs 0.868 linear / 0.778 quadratic (README)");
  return o;
}

Outcome mode_properties() {
  Outcome o;
  std::mt19937 rng(1234);
  const auto cfg = default_style();
  const auto t0 = Clock::now();
  std::size_t problems = 0;
  auto problem = [&](const std::string& what) {
    if (++problems <= 5) o.fail(what);
  };

  for (int round = 0; round < 1000; ++round) {
    const int pieces = std::uniform_int_distribution<int>(1, 60)(rng);
    const auto text = testing::random_text(rng, pieces);
    const auto tokens = classify_tokens(tokenize(text), Lexicon::builtin());
    const auto normal = apply_mode(tokens, Mode::Normal, cfg);
    const auto keyword = apply_mode(tokens, Mode::Keyword, cfg);
    const auto dynamik = apply_mode(tokens, Mode::Dynamik, cfg);

    // (a) count and order
    for (const auto* cues : {&normal, &keyword, &dynamik}) {
      bool same = cues->size() == tokens.size();
      for (std::size_t i = 0; same && i < tokens.size(); ++i) same = (*cues)[i].text == tokens[i].token.surface;
      if (!same) problem("token count/order changed for: " + text);
    }
    // (b) Dynamik sizes
    for (const auto& c : dynamik)
      if (c.size_pt != 18.0 && c.size_pt != 12.0) problem("Dynamik size " + std::to_string(c.size_pt));
    // (c) Keyword words are the keyword subsequence of Normal words
    std::vector<std::string> shown, expected;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].word_class.family() == Family::Punct) continue;
      if (keyword[i].visible) shown.push_back(keyword[i].text);
      if (normal[i].visible && tokens[i].is_keyword()) expected.push_back(normal[i].text);
    }
    if (shown != expected) problem("Keyword visible words differ from keyword subsequence for: " + text);
    // (d) negation always keyword-sized
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].word_class.subkind != Subkind::Negative) continue;
      for (const auto* cues : {&normal, &keyword, &dynamik})
        if ((*cues)[i].size_pt != cfg.keyword_size_pt || !(*cues)[i].visible)
          problem("negation '" + tokens[i].token.surface + "' not keyword-sized");
    }
  }
  const double elapsed = ms_since(t0);
  if (problems > 5) o.fail(std::to_string(problems - 5) + " further violations");
  if (elapsed >= 5000.0) o.fail(fmt("runtime %.0f ms (limit 5000 ms)", elapsed));
  if (o.pass) o.note(fmt("1000 sequences, properties (a)-(d) hold, %.0f ms", elapsed));
  return o;
}

Outcome streaming(bool fast) {
  Outcome o;
  const auto script = parse_replay_script(testing::read_data("scripts/news2.json"));
  const auto expected = synthesize_script("news2", testing::news(2));
  if (script.events != expected.events) o.fail("data/scripts/news2.json differs from a fresh synthesis");

  struct Seen {
    StyledFrame frame;
    Clock::time_point at;
  };
  std::vector<Seen> seen;
  std::mutex mutex;
  const LexiconTagger tagger(Lexicon::builtin());
  SettingsSlot slot(Settings{Mode::Dynamik, default_style()});
  LiveOptions options;
  options.scale = fast ? 0.0 : 1.0;
  const auto t0 = Clock::now();
  run_live(script, options, slot, tagger, Lexicon::builtin(), [&](const StyledFrame& f) {
    std::lock_guard lock(mutex);
    seen.push_back({f, Clock::now()});
  });
  const double elapsed = ms_since(t0);

  if (seen.size() < 2) {
    o.fail("fewer than two frames");
    return o;
  }
  double worst_gap = 0, max_analysis = 0;
  std::size_t overruns = 0;
  for (std::size_t i = 1; i < seen.size(); ++i) {
    const double virtual_gap = static_cast<double>(seen[i].frame.t_ms - seen[i - 1].frame.t_ms);
    const double gap = fast ? virtual_gap
                            : std::chrono::duration<double, std::milli>(seen[i].at - seen[i - 1].at).count();
    worst_gap = std::max(worst_gap, std::abs(gap - 500.0));
    if (virtual_gap != 500.0) o.fail(fmt("frame %.0f: t_ms step %.0f", static_cast<double>(i), virtual_gap));
  }
  for (const auto& s : seen) {
    max_analysis = std::max(max_analysis, std::chrono::duration<double, std::milli>(s.frame.analysis).count());
    overruns += s.frame.overrun;
  }

  const auto final_t = script.events.back().t_ms;
  std::optional<std::vector<Cue>> stable;
  std::size_t after_final = 0;
  bool stable_ok = true;
  for (const auto& s : seen) {
    if (s.frame.t_ms < final_t) continue;
    ++after_final;
    if (!stable)
      stable = s.frame.cues;
    else
      stable_ok &= *stable == s.frame.cues;
  }

  const auto spacing = fmt("%.0f frames, max |spacing - 500| = %.2f ms", static_cast<double>(seen.size()), worst_gap) +
                       (fast ? " (virtual clock)" : " (wall clock)");
  if (worst_gap > 50.0) o.fail(spacing); else o.note(spacing);
  if (after_final == 0 || !stable_ok)
    o.fail("cue texts change after the final hypothesis");
  else
    o.note(fmt("%.0f frames after the final hypothesis, all identical", static_cast<double>(after_final)));
  const auto analysis = fmt("max analysis %.3f ms, %.0f overrun frames", max_analysis, static_cast<double>(overruns));
  if (max_analysis >= 500.0) o.fail(analysis); else o.note(analysis);
  o.note(fmt("replay took %.1f s", elapsed / 1000.0));
  return o;
}

Outcome export_round_trip() {
  Outcome o;
  std::mt19937 rng(77);
  const auto t0 = Clock::now();
  const Mode modes[] = {Mode::Normal, Mode::Keyword, Mode::Dynamik};
  std::size_t problems = 0, cues_checked = 0;
  for (int round = 0; round < 100; ++round) {
    const auto cfg = default_style();
    const auto tokens = classify_tokens(tokenize(testing::random_text(rng, 80)), Lexicon::builtin());
    auto frames = sentence_frames(tokens, modes[round % 3], cfg);
    const auto vtt = testing::parse_vtt(to_webvtt(frames, cfg));
    const auto ass = testing::parse_ass(to_ass(frames, cfg));
    if (vtt.cues.size() != frames.size() || ass.cues.size() != frames.size()) {
      ++problems;
      continue;
    }
    for (std::size_t i = 0; i < frames.size(); ++i) {
      // Word sequence and per-word size class, from the frame and from each
      // re-read document.
      std::vector<std::pair<std::string, std::string>> want;
      for_each_visible(frames[i].cues, [&](const Cue& c, bool) {
        if (!is_punctuation_text(c.text))
          want.emplace_back(c.text, c.size_pt >= cfg.keyword_size_pt ? "keyword" : "func");
      });
      auto words_of = [&](const testing::ParsedCue& cue, auto to_class) {
        std::vector<std::pair<std::string, std::string>> got;
        for (const auto& t : tokenize(cue.text)) {
          if (t.kind == TokenKind::Punctuation) continue;
          got.emplace_back(t.surface, to_class(cue.style[t.span.start]));
        }
        return got;
      };
      const auto from_vtt = words_of(vtt.cues[i], [](const std::string& s) { return s; });
      const auto from_ass = words_of(ass.cues[i], [&](const std::string& s) {
        return std::stod(s) >= cfg.keyword_size_pt ? std::string("keyword") : std::string("func");
      });
      problems += from_vtt != want;
      problems += from_ass != want;
      ++cues_checked;
    }
  }
  const double elapsed = ms_since(t0);
  if (problems) o.fail(std::to_string(problems) + " cue mismatches");
  if (elapsed >= 5000.0) o.fail(fmt("runtime %.0f ms (limit 5000 ms)", elapsed));
  if (o.pass) o.note(fmt("100 frame lists, %.0f cues re-read identically from WebVTT and ASS, %.0f ms",
                         static_cast<double>(cues_checked), elapsed));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool fast = argc > 1 && std::string(argv[1]) == "--fast";

  report("corpus table: counts within +/-3 tokens, density within +/-3 pp, < 1 s", corpus_table());
  report("function-word share 0.40 +/- 0.06 over the six transcripts", function_share());
  report("area arithmetic: 0.8667 (linear) and 0.7778 (quadratic)", area_arithmetic());
  report("mode-transform properties over 1000 random sequences, < 5 s", mode_properties());
  report("streaming: News-2 replay spacing, final-hypothesis stability, analysis budget", streaming(fast));
  report("export round-trip over 100 random frame lists, < 5 s", export_round_trip());
  std::cout << "N/A   human-subject results (comprehension, NASA-TLX): not reproducible at desk scale\n";

  std::cout << "\n" << failures << " of 6 criteria failed\n";
  return failures == 0 ? 0 : 1;
}
