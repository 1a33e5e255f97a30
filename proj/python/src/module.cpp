#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "dynamik/classify.hpp"
#include "dynamik/error.hpp"
#include "dynamik/export.hpp"
#include "dynamik/metrics.hpp"
#include "dynamik/replay.hpp"
#include "dynamik/scheduler.hpp"
#include "dynamik/style.hpp"
#include "dynamik/tokenize.hpp"
#include "dynamik/wire.hpp"

namespace py = pybind11;
using namespace dynamik;

namespace {

// Python indexes str by code point; the core reports byte offsets.
class Offsets {
 public:
  explicit Offsets(std::string_view text) : index_(text.size() + 1, 0) {
    std::size_t cp = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      index_[i] = cp;
      if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) ++cp;
    }
    // Continuation bytes were given the index of the following code point;
    // spans only ever start and end on boundaries, so that is harmless.
    index_[text.size()] = cp;
  }
  std::size_t operator()(std::size_t byte) const { return index_.at(byte); }

 private:
  std::vector<std::size_t> index_;
};

Lexicon lexicon_for(const std::optional<std::string>& path) {
  return load_lexicon(path ? std::optional<std::filesystem::path>(*path) : std::nullopt);
}

Mode mode_for(const std::string& name) {
  const auto mode = parse_mode(name);
  if (!mode) throw ValidationError("unknown mode '" + name + "' (expected normal, keyword or dynamik)");
  return *mode;
}

StyleConfig style_for(double keyword_size_pt, double function_size_pt) {
  StyleConfig cfg = default_style();
  cfg.keyword_size_pt = keyword_size_pt;
  cfg.function_size_pt = function_size_pt;
  cfg.validate();
  return cfg;
}

py::dict token_dict(const ClassifiedToken& t, const Offsets& at) {
  py::dict d;
  d["surface"] = t.token.surface;
  d["start"] = at(t.token.span.start);
  d["end"] = at(t.token.span.end);
  d["kind"] = to_string(t.token.kind);
  d["family"] = std::string(to_string(t.word_class.family()));
  d["subkind"] = std::string(to_string(t.word_class.subkind));
  d["is_keyword"] = t.is_keyword();
  return d;
}

py::dict cue_dict(const Cue& c) {
  py::dict d;
  d["text"] = c.text;
  d["size_pt"] = c.size_pt;
  d["visible"] = c.visible;
  d["is_keyword"] = c.is_keyword;
  return d;
}

std::vector<StyledFrame> frames_for(const std::string& text, const std::string& mode, const StyleConfig& cfg,
                                    std::int64_t ms_per_word) {
  const auto classified = classify_tokens(tokenize(text), Lexicon::builtin());
  return sentence_frames(classified, mode_for(mode), cfg, ms_per_word);
}

}  // namespace

PYBIND11_MODULE(_dynamik, m) {
  m.doc() = "Keyword-emphasis subtitling core";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  auto validation = py::register_exception<ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<UndefinedDensityError>(m, "UndefinedDensityError", error.ptr());
  (void)validation;

  m.def(
      "tokenize",
      [](const std::string& text) {
        const Offsets at(text);
        py::list out;
        for (const auto& t : tokenize(text)) {
          py::dict d;
          d["surface"] = t.surface;
          d["start"] = at(t.span.start);
          d["end"] = at(t.span.end);
          d["kind"] = to_string(t.kind);
          out.append(d);
        }
        return out;
      },
      py::arg("text"), "Tokens with code-point offsets into `text`.");

  m.def(
      "classify",
      [](const std::string& text, const std::optional<std::string>& lexicon) {
        const auto lex = lexicon_for(lexicon);
        const Offsets at(text);
        py::list out;
        for (const auto& t : classify_tokens(tokenize(text), lex)) out.append(token_dict(t, at));
        return out;
      },
      py::arg("text"), py::arg("lexicon") = py::none());

  m.def(
      "apply_mode",
      [](const std::string& text, const std::string& mode, double keyword_size_pt, double function_size_pt) {
        const auto cues =
            apply_mode(classify_tokens(tokenize(text), Lexicon::builtin()), mode_for(mode),
                       style_for(keyword_size_pt, function_size_pt));
        py::list out;
        for (const auto& c : cues) out.append(cue_dict(c));
        return out;
      },
      py::arg("text"), py::arg("mode"), py::arg("keyword_size_pt") = 18.0, py::arg("function_size_pt") = 12.0);

  m.def(
      "density_report",
      [](const std::string& text, double size_ratio) {
        StyleConfig cfg = default_style();
        cfg.function_size_pt = cfg.keyword_size_pt * size_ratio;
        cfg.validate();
        const auto r = density_report(classify_tokens(tokenize(text), Lexicon::builtin()), cfg);
        py::dict d;
        d["total_words"] = r.total_words;
        d["content_words"] = r.content_words;
        d["function_words"] = r.function_words;
        d["lexical_density_pct"] = r.lexical_density_pct;
        d["area_ratio_linear"] = r.area_ratio_linear;
        d["area_ratio_quadratic"] = r.area_ratio_quadratic;
        return d;
      },
      py::arg("text"), py::arg("size_ratio") = 12.0 / 18.0);

  m.def("area_ratio", &area_ratio, py::arg("function_fraction"), py::arg("size_ratio"), py::arg("exponent"));

  m.def(
      "to_webvtt",
      [](const std::string& text, const std::string& mode, std::int64_t ms_per_word) {
        const auto cfg = default_style();
        return to_webvtt(frames_for(text, mode, cfg, ms_per_word), cfg);
      },
      py::arg("text"), py::arg("mode"), py::arg("ms_per_word") = 300);

  m.def(
      "to_ass",
      [](const std::string& text, const std::string& mode, std::int64_t ms_per_word) {
        const auto cfg = default_style();
        return to_ass(frames_for(text, mode, cfg, ms_per_word), cfg);
      },
      py::arg("text"), py::arg("mode"), py::arg("ms_per_word") = 300);

  m.def(
      "synthesize_script",
      [](const std::string& name, const std::string& transcript, std::int64_t ms_per_word, bool per_sentence) {
        return to_json(synthesize_script(name, transcript, ms_per_word, per_sentence));
      },
      py::arg("name"), py::arg("transcript"), py::arg("ms_per_word") = 300, py::arg("per_sentence") = false,
      "Replay script JSON pacing the transcript word by word.");

  m.def(
      "parse_replay_script",
      [](const std::string& json) {
        const auto script = parse_replay_script(json);
        py::list events;
        for (const auto& e : script.events) events.append(py::make_tuple(e.t_ms, e.text, e.is_final));
        return py::make_tuple(script.name, events);
      },
      py::arg("json"), "(name, [(t_ms, text, is_final), ...]); raises ParseError naming the bad event.");

  m.def(
      "replay_messages",
      [](const std::string& script_json, const std::string& mode, double scale, std::int64_t refresh_ms,
         std::int64_t linger_ms) {
        const auto script = parse_replay_script(script_json);
        const LexiconTagger tagger(Lexicon::builtin());
        SettingsSlot slot(Settings{mode_for(mode), default_style()});
        LiveOptions options{{refresh_ms, linger_ms}, scale};
        std::vector<std::string> messages;
        {
          py::gil_scoped_release release;
          run_live(script, options, slot, tagger, Lexicon::builtin(),
                   [&](const StyledFrame& f) { messages.push_back(wire::frame_message(f)); });
        }
        return messages;
      },
      py::arg("script_json"), py::arg("mode"), py::arg("scale") = 0.0, py::arg("refresh_ms") = 500,
      py::arg("linger_ms") = 2000, "Frame messages for a replay; scale 0 runs on a virtual clock.");

  m.def("default_style", [] {
    const auto cfg = default_style();
    py::dict d;
    d["keyword_size_pt"] = cfg.keyword_size_pt;
    d["function_size_pt"] = cfg.function_size_pt;
    d["color"] = py::make_tuple(cfg.color.r, cfg.color.g, cfg.color.b, cfg.color.a);
    d["background"] = py::make_tuple(cfg.background.r, cfg.background.g, cfg.background.b, cfg.background.a);
    d["typeface_name"] = cfg.typeface_name;
    return d;
  });
}
