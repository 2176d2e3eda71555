#pragma once

#include "ffree/digraph.hpp"
#include "ffree/recognize.hpp"
#include "ffree/search.hpp"

namespace ffree {

// Two text forms, told apart by the first content line. Arc lists open
// with "n <order>" and continue with one "tail head" pair per line;
// matrices are square blocks of '0'/'1' rows, spaces allowed. Blank
// lines and '#' comments are skipped in both.
Digraph read_digraph_text(const std::string& text);
Digraph read_digraph_file(const std::string& path);

std::string write_matrix(const Digraph& d);
std::string write_arclist(const Digraph& d);
std::string write_dot(const Digraph& d);

std::string check_report_json(const Digraph& d, const CheckReport& rep);
std::string search_result_json(const SearchResult& res);
std::string audit_report_json(const AuditReport& rep);
std::string recognition_report_json(const RecognitionReport& rep);

}  // namespace ffree
