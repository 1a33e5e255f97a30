#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dynamik::websocket {

/// Sec-WebSocket-Accept value for a client key.
std::string accept_key(std::string_view client_key);

/// Case-insensitive header lookup in a raw HTTP request head.
std::optional<std::string> header_value(std::string_view request, std::string_view name);

enum class Opcode : std::uint8_t { Continuation = 0, Text = 1, Binary = 2, Close = 8, Ping = 9, Pong = 10 };

/// Unmasked server-to-client frame with FIN set.
std::string encode_frame(Opcode opcode, std::string_view payload);

struct Frame {
  bool fin = true;
  Opcode opcode = Opcode::Text;
  std::string payload;
};

/// Decodes one frame from the front of `buffer`, unmasking if needed, and
/// erases it. Returns nullopt when more bytes are needed.
std::optional<Frame> decode_frame(std::string& buffer);

}  // namespace dynamik::websocket
