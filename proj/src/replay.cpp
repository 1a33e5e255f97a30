#include "dynamik/replay.hpp"

#include <condition_variable>
#include <mutex>
#include <string>

#include "dynamik/error.hpp"
#include "dynamik/tokenize.hpp"
#include "json.hpp"

namespace dynamik {

using json = nlohmann::json;

ReplayScript parse_replay_script(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("replay script is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(0, "replay script must be an object");
  if (!doc.contains("name") || !doc["name"].is_string()) throw ParseError(0, "replay script needs a string 'name'");
  if (!doc.contains("events") || !doc["events"].is_array())
    throw ParseError(0, "replay script needs an 'events' array");

  ReplayScript script;
  script.name = doc["name"].get<std::string>();
  const auto& events = doc["events"];
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& e = events[i];
    auto fail = [i](const std::string& what) {
      throw ParseError(i, "event " + std::to_string(i) + ": " + what);
    };
    if (!e.is_object()) fail("not an object");
    if (!e.contains("t_ms") || !e["t_ms"].is_number_integer()) fail("'t_ms' must be an integer");
    if (!e.contains("text") || !e["text"].is_string()) fail("'text' must be a string");
    if (!e.contains("is_final") || !e["is_final"].is_boolean()) fail("'is_final' must be a boolean");

    HypothesisEvent ev{e["t_ms"].get<std::int64_t>(), e["text"].get<std::string>(), e["is_final"].get<bool>()};
    if (ev.t_ms < 0) fail("'t_ms' is negative");
    if (ev.text.empty()) fail("'text' is empty");
    if (!script.events.empty() && ev.t_ms < script.events.back().t_ms) fail("timestamps go backwards");
    script.events.push_back(std::move(ev));
  }
  return script;
}

std::string to_json(const ReplayScript& script) {
  nlohmann::ordered_json doc;
  doc["name"] = script.name;
  doc["events"] = nlohmann::ordered_json::array();
  for (const auto& e : script.events) {
    nlohmann::ordered_json ev;
    ev["t_ms"] = e.t_ms;
    ev["text"] = e.text;
    ev["is_final"] = e.is_final;
    doc["events"].push_back(std::move(ev));
  }
  return doc.dump(2);
}

ReplayScript synthesize_script(std::string name, std::string_view transcript, std::int64_t ms_per_word,
                               bool per_sentence) {
  if (ms_per_word <= 0) throw ValidationError("ms_per_word must be positive");
  ReplayScript script{std::move(name), {}};
  const auto tokens = tokenize(transcript);

  std::int64_t t = 0;
  std::size_t utterance_start = 0;  // byte offset of the live utterance
  bool live = false;
  std::size_t last_end = 0;

  auto finish = [&](std::size_t end) {
    script.events.push_back({t, std::string(transcript.substr(utterance_start, end - utterance_start)), true});
    t += ms_per_word;
    live = false;
  };

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& tok = tokens[i];
    if (!live) {
      utterance_start = tok.span.start;
      live = true;
    }
    last_end = tok.span.end;
    if (tok.is_word_like()) {
      script.events.push_back(
          {t, std::string(transcript.substr(utterance_start, tok.span.end - utterance_start)), false});
      t += ms_per_word;
    }
    const bool terminal = tok.surface == "." || tok.surface == "!" || tok.surface == "?";
    const bool next_is_terminal = i + 1 < tokens.size() &&
                                  (tokens[i + 1].surface == "." || tokens[i + 1].surface == "!" ||
                                   tokens[i + 1].surface == "?");
    if (per_sentence && terminal && !next_is_terminal) finish(tok.span.end);
  }
  if (live) finish(last_end);
  return script;
}

ReplayClock::ReplayClock(double scale) : scale_(scale), origin_(WallClock::now()) {
  if (!(scale >= 0.0)) throw ValidationError("replay scale must be >= 0");
}

void ReplayClock::start() { origin_ = WallClock::now(); }

ReplayClock::WallClock::time_point ReplayClock::wall_time(std::int64_t stream_ms) const {
  const auto offset = std::chrono::duration<double, std::milli>(static_cast<double>(stream_ms) * scale_);
  return origin_ + std::chrono::duration_cast<WallClock::duration>(offset);
}

bool ReplayClock::sleep_until(std::int64_t stream_ms, std::stop_token stop) const {
  if (is_virtual()) return !stop.stop_requested();
  std::mutex m;
  std::condition_variable_any cv;
  std::unique_lock lock(m);
  cv.wait_until(lock, stop, wall_time(stream_ms), [] { return false; });
  return !stop.stop_requested();
}

void replay(const ReplayScript& script, const ReplayClock& clock, const ReplayHandlers& handlers,
            std::stop_token stop) {
  for (const auto& event : script.events) {
    if (handlers.horizon) handlers.horizon(event.t_ms - 1);
    if (!clock.sleep_until(event.t_ms, stop)) return;
    if (handlers.deliver) handlers.deliver(event);
  }
}

}  // namespace dynamik
