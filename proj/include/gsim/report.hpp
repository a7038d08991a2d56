#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace gsim {

// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

// Hex SHA-1 of the text framed as a git blob ("blob <size>\0<text>").
std::string git_blob_hash(std::string_view text);

void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

// Minimal CSV builder; fields never contain separators here.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);

    CsvWriter& cell(std::string_view text);
    CsvWriter& cell(double value);
    CsvWriter& cell(long long value);
    CsvWriter& cell(std::size_t value) { return cell(static_cast<long long>(value)); }
    CsvWriter& cell(int value) { return cell(static_cast<long long>(value)); }
    void end_row();

    const std::string& str() const noexcept { return text_; }

private:
    std::size_t columns_;
    std::size_t in_row_ = 0;
    std::string text_;
};

}  // namespace gsim
