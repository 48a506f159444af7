#ifndef NILCERT_IO_FILES_HPP
#define NILCERT_IO_FILES_HPP

#include <filesystem>
#include <string>

#include "certificates/certificates.hpp"
#include "degeneration/degeneration.hpp"

namespace nilcert {

std::string read_text_file(const std::filesystem::path& path);

/// Algebra file:
///   name A_01
///   dim 5
///   field Q(i)            (or Q: coefficients must then be real)
///   symmetric true        (default; each line also sets e_j * e_i)
///   e_1 * e_1 = e_2
/// Blank lines and '#' comments are ignored; omitted products are zero.
struct AlgebraFile {
    std::string name;
    std::string field = "Q(i)";
    bool symmetric = true;
    ConstTable table;
};

AlgebraFile parse_algebra(const std::string& text);
AlgebraFile read_algebra(const std::filesystem::path& path);
/// Lines for every nonzero product, with i <= j when symmetric.
std::string print_algebra(const AlgebraFile& a);
AlgebraFile catalog_algebra_file(const catalog::Entry& e);

/// Witness file:
///   source A_23
///   target A_24
///   E_1 = t e_1 + e_2
///   ...   (one line per basis vector of the source algebra)
DegenerationWitness parse_witness(const std::string& text);
DegenerationWitness read_witness(const std::filesystem::path& path);
std::string print_witness(const DegenerationWitness& w);

/// Certificate file:
///   sources A_05 A_06 A_07
///   targets A_21
///   condition dim Ann >= 2
///   note <free text kept in reports>
///   witness A_13          (then one line "f_k = <constant combination>" per basis vector)
NonDegenerationClaim parse_certificate(const std::string& text, const std::string& id = {});
NonDegenerationClaim read_certificate(const std::filesystem::path& path);
std::string print_certificate(const NonDegenerationClaim& c);

}  // namespace nilcert

#endif
