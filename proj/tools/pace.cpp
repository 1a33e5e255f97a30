// Turns a plain transcript into a replay script that reveals it word by word.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dynamik/error.hpp"
#include "dynamik/replay.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Synthesize a replay script from a transcript", "dynamik-pace"};
  std::string input, output, name;
  std::int64_t ms_per_word = 300;
  bool per_sentence = false;
  app.add_option("transcript", input, "UTF-8 transcript")->required()->check(CLI::ExistingFile);
  app.add_option("-o,--out", output, "Output path (default: stdout)");
  app.add_option("--name", name, "Script name (default: transcript file stem)");
  app.add_option("--ms-per-word", ms_per_word, "Pacing in milliseconds")->check(CLI::PositiveNumber);
  app.add_flag("--per-sentence", per_sentence, "One utterance per sentence instead of one for the whole text");
  CLI11_PARSE(app, argc, argv);

  std::ifstream in(input, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  if (name.empty()) name = std::filesystem::path(input).stem().string();

  try {
    const auto json = dynamik::to_json(dynamik::synthesize_script(name, text.str(), ms_per_word, per_sentence));
    if (output.empty()) {
      std::cout << json << '\n';
    } else {
      std::ofstream out(output, std::ios::binary);
      out << json << '\n';
    }
  } catch (const dynamik::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
