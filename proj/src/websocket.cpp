#include "websocket.hpp"

#include <openssl/evp.h>

#include <array>

namespace dynamik::websocket {

std::string accept_key(std::string_view client_key) {
  static constexpr std::string_view kGuid = "258EAFA5-E914-47DA-95CA-C5AB0DC85B11";
  const std::string input = std::string(client_key) + std::string(kGuid);

  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int digest_len = 0;
  EVP_Digest(input.data(), input.size(), digest.data(), &digest_len, EVP_sha1(), nullptr);

  std::array<unsigned char, 4 * ((EVP_MAX_MD_SIZE + 2) / 3) + 1> encoded{};
  const int n = EVP_EncodeBlock(encoded.data(), digest.data(), static_cast<int>(digest_len));
  return std::string(reinterpret_cast<const char*>(encoded.data()), static_cast<std::size_t>(n));
}

std::optional<std::string> header_value(std::string_view request, std::string_view name) {
  auto lower = [](char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; };
  std::size_t pos = 0;
  while (pos < request.size()) {
    const auto eol = request.find("\r\n", pos);
    const std::size_t line_end = eol == std::string_view::npos ? request.size() : eol;
    const auto line = request.substr(pos, line_end - pos);
    const auto colon = line.find(':');
    if (colon != std::string_view::npos && colon == name.size()) {
      bool match = true;
      for (std::size_t i = 0; i < name.size() && match; ++i) match = lower(line[i]) == lower(name[i]);
      if (match) {
        auto value = line.substr(colon + 1);
        while (!value.empty() && (value.front() == ' ' || value.front() == '\t')) value.remove_prefix(1);
        while (!value.empty() && (value.back() == ' ' || value.back() == '\t')) value.remove_suffix(1);
        return std::string(value);
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 2;
  }
  return std::nullopt;
}

std::string encode_frame(Opcode opcode, std::string_view payload) {
  std::string out;
  out.reserve(payload.size() + 10);
  out.push_back(static_cast<char>(0x80 | static_cast<std::uint8_t>(opcode)));
  const std::uint64_t n = payload.size();
  if (n < 126) {
    out.push_back(static_cast<char>(n));
  } else if (n <= 0xFFFF) {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>((n >> 8) & 0xFF));
    out.push_back(static_cast<char>(n & 0xFF));
  } else {
    out.push_back(static_cast<char>(127));
    for (int shift = 56; shift >= 0; shift -= 8) out.push_back(static_cast<char>((n >> shift) & 0xFF));
  }
  out.append(payload);
  return out;
}

std::optional<Frame> decode_frame(std::string& buffer) {
  if (buffer.size() < 2) return std::nullopt;
  const auto byte = [&](std::size_t i) { return static_cast<std::uint8_t>(buffer[i]); };

  Frame frame;
  frame.fin = (byte(0) & 0x80) != 0;
  frame.opcode = static_cast<Opcode>(byte(0) & 0x0F);
  const bool masked = (byte(1) & 0x80) != 0;
  std::uint64_t length = byte(1) & 0x7F;
  std::size_t offset = 2;
  if (length == 126) {
    if (buffer.size() < 4) return std::nullopt;
    length = (std::uint64_t{byte(2)} << 8) | byte(3);
    offset = 4;
  } else if (length == 127) {
    if (buffer.size() < 10) return std::nullopt;
    length = 0;
    for (std::size_t i = 2; i < 10; ++i) length = (length << 8) | byte(i);
    offset = 10;
  }
  std::array<std::uint8_t, 4> mask{};
  if (masked) {
    if (buffer.size() < offset + 4) return std::nullopt;
    for (std::size_t i = 0; i < 4; ++i) mask[i] = byte(offset + i);
    offset += 4;
  }
  if (buffer.size() - offset < length) return std::nullopt;

  frame.payload = buffer.substr(offset, static_cast<std::size_t>(length));
  if (masked)
    for (std::size_t i = 0; i < frame.payload.size(); ++i)
      frame.payload[i] = static_cast<char>(static_cast<std::uint8_t>(frame.payload[i]) ^ mask[i % 4]);
  buffer.erase(0, offset + static_cast<std::size_t>(length));
  return frame;
}

}  // namespace dynamik::websocket
