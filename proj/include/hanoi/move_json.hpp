#pragma once

// Canonical JSON forms: a move is {"disk":d,"from":a,"to":b} with an
// optional "step"; a sequence file is one JSON array of moves in order.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "hanoi/puzzle.hpp"
#include "hanoi/verifier.hpp"

namespace hanoi {

class MoveFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Streams the array one move per line without buffering the sequence.
class JsonMoveWriter {
public:
    explicit JsonMoveWriter(std::ostream& os);
    ~JsonMoveWriter();
    JsonMoveWriter(const JsonMoveWriter&) = delete;
    JsonMoveWriter& operator=(const JsonMoveWriter&) = delete;

    void write(const Move& m);
    // Closes the array; called by the destructor if not called explicitly.
    void close();

private:
    std::ostream& os_;
    std::uint64_t step_ = 0;
    bool closed_ = false;
};

void write_moves_json(std::ostream& os, const std::vector<Move>& moves);

// Throws MoveFormatError when the document is not an array of move objects.
std::vector<Move> parse_moves_json(std::istream& is);
std::vector<Move> parse_moves_json(const nlohmann::json& doc);

nlohmann::ordered_json to_json(const VerificationReport& r);

}  // namespace hanoi
