#include "hanoi/move_json.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace hanoi {

JsonMoveWriter::JsonMoveWriter(std::ostream& os) : os_(os) { os_ << "["; }

JsonMoveWriter::~JsonMoveWriter()
{
    if (!closed_)
        close();
}

void JsonMoveWriter::write(const Move& m)
{
    os_ << (step_ ? ",\n" : "\n") << R"({"disk":)" << m.disk << R"(,"from":)" << m.from << R"(,"to":)" << m.to
        << R"(,"step":)" << step_ << '}';
    ++step_;
}

void JsonMoveWriter::close()
{
    os_ << "\n]\n";
    closed_ = true;
}

void write_moves_json(std::ostream& os, const std::vector<Move>& moves)
{
    JsonMoveWriter w(os);
    for (const auto& m : moves)
        w.write(m);
}

std::vector<Move> parse_moves_json(std::istream& is)
{
    nlohmann::json doc;
    try {
        is >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw MoveFormatError(std::string("invalid JSON: ") + e.what());
    }
    return parse_moves_json(doc);
}

std::vector<Move> parse_moves_json(const nlohmann::json& doc)
{
    if (!doc.is_array())
        throw MoveFormatError("move file must contain a JSON array");
    std::vector<Move> out;
    out.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& item = doc[i];
        auto field = [&](const char* name) {
            if (!item.is_object() || !item.contains(name) || !item[name].is_number_integer())
                throw MoveFormatError("move " + std::to_string(i) + ": missing integer field \"" + name + "\"");
            const auto v = item[name].get<long long>();
            if (v < -1'000'000 || v > 1'000'000)
                throw MoveFormatError("move " + std::to_string(i) + ": field \"" + name + "\" out of range");
            return static_cast<int>(v);
        };
        out.push_back(Move{field("disk"), field("from"), field("to")});
    }
    return out;
}

nlohmann::ordered_json to_json(const VerificationReport& r)
{
    nlohmann::ordered_json j;
    j["legal"] = r.legal;
    j["reached_goal"] = r.reached_goal;
    j["length"] = r.length.convert_to<std::uint64_t>();
    j["largest_disk_move_indices"] = r.largest_disk_move_indices;
    j["midpoint_bifurcation"] = r.midpoint_bifurcation;
    if (r.first_failure)
        j["first_failure"] = {{"index", r.first_failure->index}, {"reason", r.first_failure->reason}};
    else
        j["first_failure"] = nullptr;
    j["per_disk_moves"] = r.per_disk_moves;
    if (!r.midpoint_bifurcation)
        j["midpoint_note"] = r.midpoint_note;
    return j;
}

}  // namespace hanoi
