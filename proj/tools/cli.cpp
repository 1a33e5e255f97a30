#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "dynamik/classify.hpp"
#include "dynamik/export.hpp"
#include "dynamik/metrics.hpp"
#include "dynamik/scheduler.hpp"
#include "dynamik/server.hpp"
#include "dynamik/tokenize.hpp"
#include "dynamik/wire.hpp"
#include "json.hpp"

namespace dynamik::cli {
namespace {

std::atomic<bool> g_interrupted{false};

extern "C" void on_interrupt(int) { g_interrupted = true; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<ClassifiedToken> analyse(const std::string& text, const Lexicon& lexicon) {
  return classify_tokens(tokenize(text), lexicon);
}

Mode require_mode(const std::string& name) {
  const auto mode = parse_mode(name);
  if (!mode) throw ValidationError("unknown mode '" + name + "' (expected normal, keyword or dynamik)");
  return *mode;
}

int cmd_classify(const std::string& file, const std::string& lexicon_path, std::ostream& out) {
  const auto lexicon = load_lexicon(lexicon_path.empty() ? std::nullopt : std::optional<std::filesystem::path>(lexicon_path));
  for (const auto& t : analyse(read_file(file), lexicon))
    out << t.token.surface << '\t' << to_string(t.word_class.family()) << '\t' << to_string(t.word_class.subkind)
        << '\n';
  return 0;
}

int cmd_metrics(const std::vector<std::string>& files, double size_ratio, int exponent, std::ostream& out,
                std::ostream& err) {
  if (!(size_ratio > 0.0 && size_ratio <= 1.0)) throw ValidationError("--size-ratio must lie in (0, 1]");
  if (exponent != 0 && exponent != 1 && exponent != 2) throw ValidationError("--exponent must be 1 or 2");

  StyleConfig cfg = default_style();
  cfg.function_size_pt = cfg.keyword_size_pt * size_ratio;
  const auto lexicon = load_lexicon();

  int status = 0;
  for (const auto& file : files) {
    try {
      const auto report = density_report(analyse(read_file(file), lexicon), cfg);
      if (exponent == 0) {
        out << to_json(report) << '\n';
      } else {
        auto j = nlohmann::ordered_json::parse(to_json(report));
        j["area_ratio"] = exponent == 1 ? report.area_ratio_linear : report.area_ratio_quadratic;
        out << j.dump() << '\n';
      }
    } catch (const Error& e) {
      err << file << ": " << e.what() << '\n';
      status = 1;
    }
  }
  return status;
}

int cmd_style(const std::string& file, const std::string& mode_name, const std::string& out_path) {
  const auto mode = require_mode(mode_name);
  const auto ext = std::filesystem::path(out_path).extension().string();
  if (ext != ".vtt" && ext != ".ass") throw ValidationError("--out must end in .vtt or .ass");

  const auto cfg = default_style();
  const auto frames = sentence_frames(analyse(read_file(file), load_lexicon()), mode, cfg);
  const auto document = ext == ".vtt" ? to_webvtt(frames, cfg) : to_ass(frames, cfg);

  std::ofstream outf(out_path, std::ios::binary);
  if (!outf) throw Error("cannot write " + out_path);
  outf << document;
  if (!outf) throw Error("write failed for " + out_path);
  return 0;
}

int cmd_replay(const std::string& script_path, const std::string& mode_name, double scale, std::ostream& out) {
  const auto script = parse_replay_script(read_file(script_path));
  const auto lexicon = load_lexicon();
  const LexiconTagger tagger(lexicon);
  SettingsSlot settings(Settings{require_mode(mode_name), default_style()});

  LiveOptions options;
  options.scale = scale;
  run_live(script, options, settings, tagger, lexicon,
           [&](const StyledFrame& frame) { out << wire::frame_message(frame) << '\n' << std::flush; });
  return 0;
}

int cmd_serve(const std::string& script_path, int port, const std::string& mode_name, double scale,
              std::ostream& err) {
  if (port < 0 || port > 65535) throw ValidationError("--port must be 0-65535");
  const auto script = parse_replay_script(read_file(script_path));
  const auto lexicon = load_lexicon();
  const LexiconTagger tagger(lexicon);
  SettingsSlot settings(Settings{require_mode(mode_name), default_style()});

  ServerOptions server_options;
  server_options.port = static_cast<std::uint16_t>(port);
  server_options.log = [&err](const std::string& line) { err << "[dynamik] " << line << '\n'; };
  FrameServer server(server_options, settings);
  server.start();
  err << "[dynamik] serving '" << script.name << "' on port " << server.port() << '\n';

  g_interrupted = false;
  const auto previous_int = std::signal(SIGINT, on_interrupt);
  const auto previous_term = std::signal(SIGTERM, on_interrupt);

  LiveOptions options;
  options.scale = scale;
  std::jthread pipeline([&](std::stop_token stop) {
    run_live(script, options, settings, tagger, lexicon, [&](const StyledFrame& f) { server.broadcast(f); }, stop);
    err << "[dynamik] replay finished; still serving until interrupted\n";
  });
  while (!g_interrupted) std::this_thread::sleep_for(std::chrono::milliseconds(100));

  pipeline.request_stop();
  pipeline.join();
  server.stop();
  std::signal(SIGINT, previous_int);
  std::signal(SIGTERM, previous_term);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Keyword-emphasis subtitling: classify, measure, style, replay and serve captions", "dynamik"};
  app.require_subcommand(1);

  std::string file, lexicon_path, mode, out_path, script;
  std::vector<std::string> files;
  double size_ratio = 12.0 / 18.0;
  int exponent = 0;
  double scale = 1.0;
  int port = 0;

  auto* classify = app.add_subcommand("classify", "List every token with its word class");
  classify->add_option("file", file, "UTF-8 text file")->required()->check(CLI::ExistingFile);
  classify->add_option("--lexicon", lexicon_path, "Lexicon file (default: $DYNAMIK_LEXICON or built-in)")
      ->check(CLI::ExistingFile);

  auto* metrics = app.add_subcommand("metrics", "Lexical density and display-area report, one per file");
  metrics->add_option("files", files, "UTF-8 text files")->required()->check(CLI::ExistingFile);
  metrics->add_option("--size-ratio", size_ratio, "Function-word size relative to keywords (default 2/3)");
  metrics->add_option("--exponent", exponent, "Also report area_ratio for this exponent")
      ->check(CLI::IsMember({1, 2}));

  auto* style = app.add_subcommand("style", "Export styled subtitles, one cue per sentence");
  style->add_option("file", file, "UTF-8 text file")->required()->check(CLI::ExistingFile);
  style->add_option("--mode", mode, "normal, keyword or dynamik")->required();
  style->add_option("--out", out_path, "Output file; .vtt or .ass")->required();

  auto* replay_cmd = app.add_subcommand("replay", "Replay a hypothesis script and print frame messages");
  replay_cmd->add_option("script", script, "Replay script (JSON)")->required()->check(CLI::ExistingFile);
  replay_cmd->add_option("--mode", mode, "normal, keyword or dynamik")->required();
  replay_cmd->add_option("--scale", scale, "Time scale; 0 runs as fast as possible")->check(CLI::NonNegativeNumber);

  auto* serve = app.add_subcommand("serve", "Replay a script and stream frames to clients");
  serve->add_option("script", script, "Replay script (JSON)")->required()->check(CLI::ExistingFile);
  serve->add_option("--port", port, "TCP port")->required();
  serve->add_option("--mode", mode, "normal, keyword or dynamik")->required();
  serve->add_option("--scale", scale, "Time scale; 0 runs as fast as possible")->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
  }

  try {
    if (*classify) return cmd_classify(file, lexicon_path, out);
    if (*metrics) return cmd_metrics(files, size_ratio, exponent, out, err);
    if (*style) return cmd_style(file, mode, out_path);
    if (*replay_cmd) return cmd_replay(script, mode, scale, out);
    if (*serve) return cmd_serve(script, port, mode, scale, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace dynamik::cli
