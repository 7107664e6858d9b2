#ifndef KVA_JSON_IO_HPP
#define KVA_JSON_IO_HPP

/*
 * Canonical JSON (and CSV) views of the public result types.  All integers
 * are decimal strings so results round-trip without precision loss; exact
 * rationals serialize as {"num", "den"} and irrational surds as
 * {"u", "v", "m"} meaning u + v * sqrt(m).  Key order is fixed, output is
 * byte-deterministic.
 */

#include <json.hpp>

#include <string>

#include "kva/certify.hpp"
#include "kva/obstruction.hpp"
#include "kva/pell.hpp"
#include "kva/seshadri.hpp"

namespace kva {

using Json = nlohmann::ordered_json;

Json json_rational(const Rational& x);
Json json_surd(const Surd& x);
Json json_step(const TraceStep& s);
Json json_certificate(const Certificate& c);
Json json_search(const SearchOutcome& o);
Json json_seshadri(const SeshadriBound& b);
Json json_pell(const PellSolution& p);

/* compact dump with a trailing newline, the format the CLI prints */
std::string dump_json(const Json& j);

/* survivors table; header row then one row per survivor */
std::string csv_survivors(const SearchOutcome& o);

}  // namespace kva

#endif
