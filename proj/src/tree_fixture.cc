/* vim: set sw=4 sts=4 et foldmethod=syntax : */

// Generated from data/free_trees_n1_to_9.g6 (networkx nonisomorphic_trees).

#include <prc/catalog.hh>

auto prc::free_tree_graph6_records() -> std::span<const std::string_view>
{
    static constexpr std::string_view records[] = {
        "@",
        "A_",
        "Bg",
        "Cq",
        "Ci",
        "DqC",
        "DqO",
        "DiO",
        "EpOG",
        "EsOG",
        "EsP?",
        "EqD?",
        "EqP?",
        "EiP?",
        "FpOGG",
        "FpOGO",
        "FpOI?",
        "Fs`?G",
        "FsOGO",
        "FsOI?",
        "FsPA?",
        "FqD?G",
        "FqDA?",
        "FqPA?",
        "FiPA?",
        "GpD?GC",
        "GpH?GC",
        "GpH?GG",
        "Gp`?GC",
        "Gp`?GG",
        "Gp`?I?",
        "GpOGI?",
        "GpOGOO",
        "GpOGQ?",
        "GpOI?C",
        "GpOIA?",
        "GsaA?C",
        "Gs`?GG",
        "Gs`?I?",
        "Gs`AA?",
        "GsOGQ?",
        "GsOI?C",
        "GsOIA?",
        "GsPAA?",
        "GqD?I?",
        "GqDAA?",
        "GqPAA?",
        "GiPAA?",
        "HpD?GC@",
        "HpD?GCA",
        "HpD?GCC",
        "HpD?GD?",
        "HpGa?C@",
        "HpIA?C@",
        "HpH?GCA",
        "HpH?GCC",
        "HpH?GD?",
        "HpH?GGC",
        "HpH?GH?",
        "HpH?I?@",
        "HpH?I@?",
        "Hp_I?C@",
        "HpaA?C@",
        "Hp`?GCC",
        "Hp`?GD?",
        "Hp`?GGC",
        "Hp`?GH?",
        "Hp`?I?@",
        "Hp`?I@?",
        "HpOGI?@",
        "HpOGI@?",
        "HpOGOOG",
        "HpOGOP?",
        "HpOGQ?@",
        "HpOGQ@?",
        "HpOI?D?",
        "HpOIA@?",
        "HsaCA?@",
        "HsaA?CA",
        "HsaA?D?",
        "Hs`?GGC",
        "Hs`?GH?",
        "Hs`?I?@",
        "Hs`?I@?",
        "Hs`AA@?",
        "HsOGQ?@",
        "HsOGQ@?",
        "HsOI?D?",
        "HsOIA@?",
        "HsPAA@?",
        "HqD?I?@",
        "HqD?I@?",
        "HqDAA@?",
        "HqPAA@?",
        "HiPAA@?"
    };
    return records;
}
