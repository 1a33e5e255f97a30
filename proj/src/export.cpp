#include "dynamik/export.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "dynamik/error.hpp"

namespace dynamik {
namespace {

void check_order(std::span<const StyledFrame> frames) {
  for (std::size_t i = 1; i < frames.size(); ++i)
    if (frames[i].t_ms <= frames[i - 1].t_ms)
      throw ValidationError("frames must be in strictly increasing time order (frame " + std::to_string(i) + ")");
  if (!frames.empty() && frames.front().t_ms < 0) throw ValidationError("frame times must be nonnegative");
}

std::int64_t end_time(std::span<const StyledFrame> frames, std::size_t i, std::int64_t linger_ms) {
  return i + 1 < frames.size() ? frames[i + 1].t_ms : frames[i].t_ms + linger_ms;
}

std::string format_size(double pt) {
  std::ostringstream os;
  if (pt == std::floor(pt))
    os << static_cast<std::int64_t>(pt);
  else
    os << pt;
  return os.str();
}

std::string vtt_time(std::int64_t ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%02lld:%02lld:%02lld.%03lld", static_cast<long long>(ms / 3600000),
                static_cast<long long>(ms / 60000 % 60), static_cast<long long>(ms / 1000 % 60),
                static_cast<long long>(ms % 1000));
  return buf;
}

std::string ass_time(std::int64_t ms) {
  const auto cs = ms / 10;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld:%02lld:%02lld.%02lld", static_cast<long long>(cs / 360000),
                static_cast<long long>(cs / 6000 % 60), static_cast<long long>(cs / 100 % 60),
                static_cast<long long>(cs % 100));
  return buf;
}

std::string vtt_escape(std::string_view text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

std::string ass_sanitize(std::string_view text) {
  std::string out(text);
  for (auto& c : out) {
    if (c == '{') c = '(';
    if (c == '}') c = ')';
    if (c == '\\') c = '/';
  }
  return out;
}

// &HAABBGGRR, where AA is transparency (00 = opaque).
std::string ass_colour(const Rgba& c) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "&H%02X%02X%02X%02X", 255 - c.a, c.b, c.g, c.r);
  return buf;
}

std::string css_rgba(const Rgba& c) {
  std::ostringstream os;
  os << "rgba(" << int{c.r} << ", " << int{c.g} << ", " << int{c.b} << ", " << format_size(c.a / 255.0) << ")";
  return os.str();
}

std::string tuple(const Rgba& c) {
  std::ostringstream os;
  os << '(' << int{c.r} << ',' << int{c.g} << ',' << int{c.b} << ',' << int{c.a} << ')';
  return os.str();
}

template <typename Render>
std::string join(std::span<const Cue> cues, Render render) {
  std::string out;
  for_each_visible(cues, [&](const Cue& cue, bool space) { render(out, cue, space); });
  return out;
}

}  // namespace

std::vector<StyledFrame> sentence_frames(std::span<const ClassifiedToken> tokens, Mode mode, const StyleConfig& cfg,
                                         std::int64_t ms_per_word) {
  auto is_terminal = [](const ClassifiedToken& t) {
    return t.token.surface == "." || t.token.surface == "!" || t.token.surface == "?";
  };

  std::vector<StyledFrame> frames;
  std::size_t words_before = 0;
  std::size_t start = 0;
  while (start < tokens.size()) {
    std::size_t end = start;
    while (end < tokens.size() && !is_terminal(tokens[end])) ++end;
    while (end < tokens.size() && is_terminal(tokens[end])) ++end;

    const auto sentence = tokens.subspan(start, end - start);
    std::size_t words = 0;
    for (const auto& t : sentence) words += t.word_class.family() != Family::Punct;

    // Punctuation before the first word, or between sentences, still belongs
    // somewhere; styling needs the sentence's own word for context.
    auto cues = apply_mode(sentence, mode, cfg);
    if (words == 0 && !frames.empty()) {
      auto& back = frames.back().cues;
      back.insert(back.end(), cues.begin(), cues.end());
    } else if (words > 0) {
      StyledFrame frame;
      frame.seq = frames.size() + 1;
      frame.t_ms = static_cast<std::int64_t>(words_before) * ms_per_word;
      frame.mode = mode;
      frame.cues = std::move(cues);
      frames.push_back(std::move(frame));
    }
    words_before += words;
    start = end;
  }
  return frames;
}

std::string to_webvtt(std::span<const StyledFrame> frames, const StyleConfig& cfg, std::int64_t linger_ms) {
  check_order(frames);
  std::ostringstream os;
  os << "WEBVTT\n\n";
  os << "NOTE dynamik keyword_size_pt=" << format_size(cfg.keyword_size_pt)
     << " function_size_pt=" << format_size(cfg.function_size_pt) << " color=" << tuple(cfg.color)
     << " background=" << tuple(cfg.background) << " typeface=" << cfg.typeface_name << "\n\n";
  os << "STYLE\n"
     << "::cue {\n"
     << "  color: " << css_rgba(cfg.color) << ";\n"
     << "  background-color: " << css_rgba(cfg.background) << ";\n"
     << "  font-family: \"" << cfg.typeface_name << "\";\n"
     << "}\n"
     << "::cue(.keyword) {\n"
     << "  font-size: " << format_size(cfg.keyword_size_pt) << "pt;\n"
     << "}\n"
     << "::cue(.func) {\n"
     << "  font-size: " << format_size(cfg.function_size_pt) << "pt;\n"
     << "}\n";

  for (std::size_t i = 0; i < frames.size(); ++i) {
    const auto& frame = frames[i];
    os << '\n' << frame.seq << '\n';
    os << vtt_time(frame.t_ms) << " --> " << vtt_time(end_time(frames, i, linger_ms)) << '\n';
    os << join(frame.cues, [&](std::string& out, const Cue& cue, bool space) {
      if (space) out.push_back(' ');
      const char* cls = cue.size_pt >= cfg.keyword_size_pt ? "keyword" : "func";
      out += "<c.";
      out += cls;
      out += '>';
      out += vtt_escape(cue.text);
      out += "</c>";
    });
    os << '\n';
  }
  return os.str();
}

std::string to_ass(std::span<const StyledFrame> frames, const StyleConfig& cfg, std::int64_t linger_ms) {
  check_order(frames);
  const auto colour = ass_colour(cfg.color);
  const auto back = ass_colour(cfg.background);
  std::ostringstream os;
  os << "[Script Info]\n"
     << "; dynamik keyword_size_pt=" << format_size(cfg.keyword_size_pt)
     << " function_size_pt=" << format_size(cfg.function_size_pt) << " color=" << tuple(cfg.color) << "\n"
     << "Title: dynamik subtitles\n"
     << "ScriptType: v4.00+\n"
     << "WrapStyle: 0\n"
     << "ScaledBorderAndShadow: yes\n"
     << "PlayResX: 960\n"
     << "PlayResY: 540\n\n"
     << "[V4+ Styles]\n"
     << "Format: Name, Fontname, Fontsize, PrimaryColour, SecondaryColour, OutlineColour, BackColour, Bold, "
        "Italic, Underline, StrikeOut, ScaleX, ScaleY, Spacing, Angle, BorderStyle, Outline, Shadow, "
        "Alignment, MarginL, MarginR, MarginV, Encoding\n"
     << "Style: Default," << cfg.typeface_name << ',' << format_size(cfg.keyword_size_pt) << ',' << colour << ','
     << colour << ',' << back << ',' << back << ",0,0,0,0,100,100,0,0,3,0,0,2,10,10,10,1\n\n"
     << "[Events]\n"
     << "Format: Layer, Start, End, Style, Name, MarginL, MarginR, MarginV, Effect, Text\n";

  for (std::size_t i = 0; i < frames.size(); ++i) {
    const auto& frame = frames[i];
    std::optional<double> current_size;
    const auto text = join(frame.cues, [&](std::string& out, const Cue& cue, bool space) {
      if (space) out.push_back(' ');
      if (current_size != cue.size_pt) {
        out += "{\\fs" + format_size(cue.size_pt) + "}";
        current_size = cue.size_pt;
      }
      out += ass_sanitize(cue.text);
    });
    os << "Dialogue: 0," << ass_time(frame.t_ms) << ',' << ass_time(end_time(frames, i, linger_ms))
       << ",Default,,0,0,0,," << text << '\n';
  }
  return os.str();
}

}  // namespace dynamik
