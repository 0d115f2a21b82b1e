#include "stvb/presentation.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace stvb {

const char* family_name(Family f) {
  switch (f) {
    case Family::stvb_full: return "stvb";
    case Family::stvb_reduced: return "stvb-reduced";
    case Family::tvb: return "tvb";
    case Family::stvg: return "stvg";
    case Family::stvp: return "stvp";
    case Family::stvh: return "stvh";
    case Family::m: return "m";
    case Family::stvpg: return "stvpg";
  }
  return "?";
}

Family family_from_name(std::string_view name) {
  if (name == "stvb" || name == "stvb-full") return Family::stvb_full;
  if (name == "stvb-reduced" || name == "reduced") return Family::stvb_reduced;
  if (name == "tvb") return Family::tvb;
  if (name == "stvg") return Family::stvg;
  if (name == "stvp") return Family::stvp;
  if (name == "stvh") return Family::stvh;
  if (name == "m") return Family::m;
  if (name == "stvpg") return Family::stvpg;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

Alphabet family_alphabet(Family f) {
  switch (f) {
    case Family::stvb_full:
    case Family::stvb_reduced:
    case Family::tvb:
      return Alphabet::braid;
    case Family::stvg:
      return Alphabet::braid_group;
    case Family::stvp:
      return Alphabet::sub_p;
    case Family::stvh:
      return Alphabet::sub_h;
    case Family::m:
      return Alphabet::sub_m;
    case Family::stvpg:
      return Alphabet::sub_pg;
  }
  return Alphabet::braid;
}

std::string binding_string(const std::map<std::string, int>& binding) {
  std::string out;
  for (const auto& [key, value] : binding) {
    if (!out.empty()) out += ',';
    out += key;
    out += '=';
    out += std::to_string(value);
  }
  return out;
}

namespace {

using Letters = std::vector<Letter>;
using Binding = std::map<std::string, int>;

struct Builder {
  int n;
  Alphabet tag;
  std::vector<Relation> rels;
  std::set<std::pair<std::string, std::string>> seen;

  void add(const std::string& label, Binding binding, Letters lhs, Letters rhs) {
    Word left(tag, n, std::move(lhs));
    Word right(tag, n, std::move(rhs));
    auto lkey = label + '|' + format_word(left);
    auto rkey = label + '|' + format_word(right);
    if (seen.count({rkey, lkey})) return;  // mirror image of an earlier instance
    seen.insert({lkey, rkey});
    rels.push_back(Relation{label, std::move(binding), std::move(left), std::move(right)});
  }
};

Letters operator+(Letters a, const Letters& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Relations (1)-(13): the twisted virtual braid group TVB_n.
void tvb_relations(Builder& b) {
  int n = b.n;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      b.add("rel-height-ss", {{"i", i}, {"j", j}}, {sigma(i), sigma(j)}, {sigma(j), sigma(i)});
    }
  }
  for (int i = 1; i <= n - 2; ++i) {
    b.add("rel-sss", {{"i", i}}, {sigma(i), sigma(i + 1), sigma(i)},
          {sigma(i + 1), sigma(i), sigma(i + 1)});
  }
  for (int i = 1; i <= n - 1; ++i) {
    b.add("rel-inverse-v", {{"i", i}}, {rho(i), rho(i)}, {});
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      b.add("rel-height-vv", {{"i", i}, {"j", j}}, {rho(i), rho(j)}, {rho(j), rho(i)});
    }
  }
  for (int i = 1; i <= n - 2; ++i) {
    b.add("rel-vvv", {{"i", i}}, {rho(i), rho(i + 1), rho(i)},
          {rho(i + 1), rho(i), rho(i + 1)});
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - 1; ++j) {
      if (i - j > 1 || j - i > 1) {
        b.add("rel-height-sv", {{"i", i}, {"j", j}}, {sigma(i), rho(j)}, {rho(j), sigma(i)});
      }
    }
  }
  for (int i = 1; i <= n - 2; ++i) {
    b.add("rel-vsv", {{"i", i}}, {rho(i), sigma(i + 1), rho(i)},
          {rho(i + 1), sigma(i), rho(i + 1)});
  }
  for (int i = 1; i <= n; ++i) {
    b.add("rel-inverse-b", {{"i", i}}, {gamma(i), gamma(i)}, {});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      b.add("rel-height-bb", {{"i", i}, {"j", j}}, {gamma(i), gamma(j)}, {gamma(j), gamma(i)});
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      b.add("rel-height-bv", {{"i", i}, {"j", j}}, {gamma(j), rho(i)}, {rho(i), gamma(j)});
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      b.add("rel-height-sb", {{"i", i}, {"j", j}}, {sigma(i), gamma(j)}, {gamma(j), sigma(i)});
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    b.add("rel-bv", {{"i", i}}, {gamma(i + 1), rho(i)}, {rho(i), gamma(i)});
  }
  for (int i = 1; i <= n - 1; ++i) {
    b.add("rel-twist-III", {{"i", i}}, {rho(i), sigma(i), rho(i)},
          {gamma(i + 1), gamma(i), sigma(i), gamma(i), gamma(i + 1)});
  }
}

// The singular-letter families.  The inverse law is carried two-sided,
// matching the R2 shape (a_i u_i = u_i a_i = e) required by the group
// embedding the full presentation is fed into.
void singular_relations(Builder& b) {
  int n = b.n;
  for (int i = 1; i <= n - 1; ++i) {
    b.add("rel-height-ss1", {{"i", i}, {"inv", 0}}, {sigma(i), sigma_inv(i)}, {});
    b.add("rel-height-ss1", {{"i", i}, {"inv", 1}}, {sigma_inv(i), sigma(i)}, {});
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      b.add("rel-height-vv2", {{"i", i}, {"j", j}}, {tau(i), tau(j)}, {tau(j), tau(i)});
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - 1; ++j) {
      if (i - j > 1 || j - i > 1) {
        b.add("rel-height-sv1", {{"i", i}, {"j", j}}, {sigma(i), tau(j)}, {tau(j), sigma(i)});
      }
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    b.add("rel-height-sv2", {{"i", i}}, {sigma(i), tau(i)}, {tau(i), sigma(i)});
  }
  for (int i = 1; i <= n - 2; ++i) {
    b.add("rel-sss1", {{"i", i}}, {sigma(i), sigma(i + 1), tau(i)},
          {tau(i + 1), sigma(i), sigma(i + 1)});
    b.add("rel-sss2", {{"i", i}}, {sigma(i + 1), sigma(i), tau(i + 1)},
          {tau(i), sigma(i + 1), sigma(i)});
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - 1; ++j) {
      if (i - j > 1 || j - i > 1) {
        b.add("rel-height-vv1", {{"i", i}, {"j", j}}, {tau(i), rho(j)}, {rho(j), tau(i)});
      }
    }
  }
  for (int i = 1; i <= n - 2; ++i) {
    b.add("rel-vvv1", {{"i", i}}, {rho(i), tau(i + 1), rho(i)},
          {rho(i + 1), tau(i), rho(i + 1)});
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      b.add("1rel-height-sb", {{"i", i}, {"j", j}}, {tau(i), gamma(j)}, {gamma(j), tau(i)});
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    b.add("1rel-twist-III", {{"i", i}}, {rho(i), tau(i), rho(i)},
          {gamma(i + 1), gamma(i), tau(i), gamma(i), gamma(i + 1)});
  }
}

// The R' families adjoined to embed the monoid in STVG_n: barred copies of
// every R3 relation, the tau inverse laws, and barred copies of R4.
void stvg_bar_relations(Builder& b) {
  int n = b.n;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - 1; ++j) {
      if (i - j > 1 || j - i > 1) {
        b.add("bar-rel-height-vv1", {{"i", i}, {"j", j}}, {tau_bar(i), rho(j)},
              {rho(j), tau_bar(i)});
      }
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      b.add("bar-1rel-height-sb", {{"i", i}, {"j", j}}, {tau_bar(i), gamma(j)},
            {gamma(j), tau_bar(i)});
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    b.add("bar-rel-height-sv2", {{"i", i}}, {sigma(i), tau_bar(i)}, {tau_bar(i), sigma(i)});
  }
  for (int i = 1; i <= n - 2; ++i) {
    b.add("bar-rel-vvv1", {{"i", i}}, {rho(i), tau_bar(i + 1), rho(i)},
          {rho(i + 1), tau_bar(i), rho(i + 1)});
    b.add("bar-rel-sss1", {{"i", i}}, {sigma(i), sigma(i + 1), tau_bar(i)},
          {tau_bar(i + 1), sigma(i), sigma(i + 1)});
    b.add("bar-rel-sss2", {{"i", i}}, {sigma(i + 1), sigma(i), tau_bar(i + 1)},
          {tau_bar(i), sigma(i + 1), sigma(i)});
  }
  for (int i = 1; i <= n - 1; ++i) {
    b.add("bar-1rel-twist-III", {{"i", i}}, {rho(i), tau_bar(i), rho(i)},
          {gamma(i + 1), gamma(i), tau_bar(i), gamma(i), gamma(i + 1)});
  }
  for (int i = 1; i <= n - 1; ++i) {
    b.add("bar-tau-inverse", {{"i", i}, {"inv", 0}}, {tau_bar(i), tau(i)}, {});
    b.add("bar-tau-inverse", {{"i", i}, {"inv", 1}}, {tau(i), tau_bar(i)}, {});
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      b.add("bar-rel-height-vv2", {{"i", i}, {"j", j}}, {tau_bar(i), tau_bar(j)},
            {tau_bar(j), tau_bar(i)});
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - 1; ++j) {
      if (i - j > 1 || j - i > 1) {
        b.add("bar-mixed-height-vv2", {{"i", i}, {"j", j}}, {tau_bar(i), tau(j)},
              {tau(j), tau_bar(i)});
      }
    }
  }
}

// The reduced presentation over sigma_1^{+-1}, tau_1, gamma_1 and the rho
// generators.  Stated only for n >= 5; the small-n degenerate forms are not
// in the source material and are not guessed here.
void reduced_relations(Builder& b) {
  int n = b.n;
  for (int i = 1; i <= n - 1; ++i) b.add("rel-inverse-v", {{"i", i}}, {rho(i), rho(i)}, {});
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      b.add("rel-height-vv", {{"i", i}, {"j", j}}, {rho(i), rho(j)}, {rho(j), rho(i)});
    }
  }
  for (int i = 1; i <= n - 2; ++i) {
    b.add("rel-vvv", {{"i", i}}, {rho(i), rho(i + 1), rho(i)},
          {rho(i + 1), rho(i), rho(i + 1)});
  }

  const Letters sig3 = {rho(2), rho(3), rho(1), rho(2), sigma(1),
                        rho(2), rho(1), rho(3), rho(2)};
  const Letters tau3 = {rho(2), rho(3), rho(1), rho(2), tau(1),
                        rho(2), rho(1), rho(3), rho(2)};
  const Letters sig2 = {rho(1), rho(2), sigma(1), rho(2), rho(1)};
  const Letters tau2 = {rho(1), rho(2), tau(1), rho(2), rho(1)};
  const Letters s1r1 = {rho(1), sigma(1), rho(1)};
  const Letters s1r2 = {rho(2), sigma(1), rho(2)};

  b.add("relB-height-ss", {}, Letters{sigma(1)} + sig3, sig3 + Letters{sigma(1)});
  b.add("relB-sss", {}, s1r1 + s1r2 + s1r1, s1r2 + s1r1 + s1r2);
  for (int j = 3; j <= n - 1; ++j) {
    b.add("relB-height-sv", {{"j", j}}, {sigma(1), rho(j)}, {rho(j), sigma(1)});
  }
  b.add("relB-inverse-b", {}, {gamma(1), gamma(1)}, {});
  for (int j = 2; j <= n - 1; ++j) {
    b.add("relB-height-bv", {{"j", j}}, {gamma(1), rho(j)}, {rho(j), gamma(1)});
  }
  b.add("relB-height-bb", {}, {gamma(1), rho(1), gamma(1), rho(1)},
        {rho(1), gamma(1), rho(1), gamma(1)});
  b.add("relB-height-sb", {}, Letters{gamma(1)} + sig2, sig2 + Letters{gamma(1)});
  b.add("relB-bv", {},
        {gamma(1), rho(1), gamma(1), sigma(1), gamma(1), rho(1), gamma(1)}, {sigma(1)});
  b.add("relB-sigma", {}, {sigma(1), sigma_inv(1)}, {});
  b.add("relB-tausigma", {}, {sigma(1), tau(1)}, {tau(1), sigma(1)});
  for (int i = 3; i <= n - 1; ++i) {
    b.add("relB-vtau", {{"i", i}}, {tau(1), rho(i)}, {rho(i), tau(1)});
  }
  b.add("relB-tau-ss", {}, Letters{tau(1)} + sig2 + Letters{sigma(1)},
        sig2 + Letters{sigma(1)} + tau2);
  b.add("relB-tau-s-comm", {}, Letters{tau(1)} + sig3, sig3 + Letters{tau(1)});
  b.add("relB-tau-tau-comm", {}, Letters{tau(1)} + tau3, tau3 + Letters{tau(1)});
  b.add("relB-height-sb2", {}, Letters{gamma(1)} + tau2, tau2 + Letters{gamma(1)});
  b.add("relB-bv2", {},
        {gamma(1), rho(1), gamma(1), tau(1), gamma(1), rho(1), gamma(1)}, {tau(1)});
}

void gamma_relations(Builder& b) {
  int n = b.n;
  for (int i = 1; i <= n; ++i) b.add("rel-inverse-b", {{"i", i}}, {gamma(i), gamma(i)}, {});
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      b.add("rel-height-bb", {{"i", i}, {"j", j}}, {gamma(i), gamma(j)}, {gamma(j), gamma(i)});
    }
  }
}

template <typename F>
void for_distinct2(int n, F f) {
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j) f(i, j);
    }
  }
}

template <typename F>
void for_distinct3(int n, F f) {
  for_distinct2(n, [&](int i, int j) {
    for (int k = 1; k <= n; ++k) {
      if (k != i && k != j) f(i, j, k);
    }
  });
}

template <typename F>
void for_distinct4(int n, F f) {
  for_distinct3(n, [&](int i, int j, int k) {
    for (int l = 1; l <= n; ++l) {
      if (l != i && l != j && l != k) f(i, j, k, l);
    }
  });
}

// STVP relations (46)-(56), shared between STVP_n and STVPG_n.
void stvp_tail_relations(Builder& b) {
  int n = b.n;
  for_distinct4(n, [&](int i, int j, int k, int l) {
    b.add("(46)", {{"i", i}, {"j", j}, {"k", k}, {"l", l}}, {lam(i, j), lam(k, l)},
          {lam(k, l), lam(i, j)});
  });
  for_distinct3(n, [&](int i, int j, int k) {
    b.add("(47)", {{"i", i}, {"j", j}, {"k", k}}, {lam(k, i), lam(k, j), lam(i, j)},
          {lam(i, j), lam(k, j), lam(k, i)});
  });
  for_distinct3(n, [&](int i, int j, int k) {
    b.add("(48)", {{"i", i}, {"j", j}, {"k", k}}, {lam(i, j), gamma(k)},
          {gamma(k), lam(i, j)});
  });
  for_distinct2(n, [&](int i, int j) {
    b.add("(49)", {{"i", i}, {"j", j}}, {lam(i, j)},
          {gamma(i), gamma(j), lam(j, i), gamma(j), gamma(i)});
  });
  for_distinct4(n, [&](int i, int j, int k, int l) {
    b.add("(50)", {{"i", i}, {"j", j}, {"k", k}, {"l", l}}, {y(i, j), y(k, l)},
          {y(k, l), y(i, j)});
  });
  for_distinct4(n, [&](int i, int j, int k, int l) {
    b.add("(51)", {{"i", i}, {"j", j}, {"k", k}, {"l", l}}, {lam(i, j), y(k, l)},
          {y(k, l), lam(i, j)});
  });
  for_distinct3(n, [&](int i, int j, int k) {
    b.add("(52)", {{"i", i}, {"j", j}, {"k", k}}, {lam(k, i), lam(k, j), y(i, j)},
          {y(i, j), lam(k, j), lam(k, i)});
  });
  for_distinct2(n, [&](int k, int l) {
    b.add("(53)", {{"k", k}, {"l", l}}, {lam(l, k), y(k, l)}, {lam(k, l), y(l, k)});
  });
  for_distinct3(n, [&](int i, int j, int k) {
    b.add("(54)", {{"i", i}, {"j", j}, {"k", k}}, {y(k, i), lam(k, j), lam(i, j)},
          {lam(i, j), lam(k, j), y(k, i)});
  });
  for_distinct3(n, [&](int i, int j, int k) {
    b.add("(55)", {{"i", i}, {"j", j}, {"k", k}}, {y(i, j), gamma(k)}, {gamma(k), y(i, j)});
  });
  for_distinct2(n, [&](int i, int j) {
    b.add("(56)", {{"i", i}, {"j", j}}, {y(i, j)},
          {gamma(i), gamma(j), y(j, i), gamma(j), gamma(i)});
  });
}

// STVP_n relations (45)-(56) over lam / y letters.
void stvp_relations(Builder& b) {
  for_distinct2(b.n, [&](int i, int j) {
    b.add("(45)", {{"i", i}, {"j", j}}, {lam(i, j), lam_inv(i, j)}, {});
  });
  stvp_tail_relations(b);
}

// The z relations (66)-(68), shared between STVH_n and M_n.
void stvh_z_relations(Builder& b) {
  int n = b.n;
  for_distinct4(n, [&](int i, int j, int k, int l) {
    b.add("(66)", {{"i", i}, {"j", j}, {"k", k}, {"l", l}}, {z(i, j), z(k, l)},
          {z(k, l), z(i, j)});
  });
  for_distinct3(n, [&](int i, int j, int k) {
    b.add("(67)", {{"i", i}, {"j", j}, {"k", k}}, {z(i, j), gamma(k)}, {gamma(k), z(i, j)});
  });
  for_distinct2(n, [&](int i, int j) {
    b.add("(68)", {{"i", i}, {"j", j}}, {z(i, j)},
          {gamma(i), gamma(j), z(j, i), gamma(j), gamma(i)});
  });
}

// STVH_n relations (57)-(68) over x / z letters.
void stvh_relations(Builder& b) {
  int n = b.n;
  for_distinct2(n, [&](int i, int j) {
    b.add("(57)", {{"i", i}, {"j", j}}, {x(i, j), x_inv(i, j)}, {});
  });
  for_distinct4(n, [&](int i, int j, int k, int l) {
    b.add("(58)", {{"i", i}, {"j", j}, {"k", k}, {"l", l}}, {x(i, j), x(k, l)},
          {x(k, l), x(i, j)});
  });
  for_distinct3(n, [&](int i, int j, int k) {
    b.add("(59)", {{"i", i}, {"j", j}, {"k", k}}, {x(i, k), x(k, j), x(i, k)},
          {x(k, j), x(i, k), x(k, j)});
  });
  for_distinct3(n, [&](int i, int j, int k) {
    b.add("(60)", {{"i", i}, {"j", j}, {"k", k}}, {x(i, j), gamma(k)}, {gamma(k), x(i, j)});
  });
  for_distinct2(n, [&](int i, int j) {
    b.add("(61)", {{"i", i}, {"j", j}}, {x(i, j)},
          {gamma(i), gamma(j), x(j, i), gamma(j), gamma(i)});
  });
  for_distinct4(n, [&](int i, int j, int k, int l) {
    b.add("(62)", {{"i", i}, {"j", j}, {"k", k}, {"l", l}}, {x(i, j), z(k, l)},
          {z(k, l), x(i, j)});
  });
  for_distinct3(n, [&](int i, int j, int k) {
    b.add("(63)", {{"i", i}, {"j", j}, {"k", k}}, {x(i, k), x(k, j), z(i, k)},
          {z(k, j), x(i, k), x(k, j)});
  });
  for_distinct3(n, [&](int i, int j, int k) {
    b.add("(64)", {{"i", i}, {"j", j}, {"k", k}}, {z(i, k), x(k, j), x(i, k)},
          {x(k, j), x(i, k), z(k, j)});
  });
  for_distinct2(n, [&](int i, int j) {
    b.add("(65)", {{"i", i}, {"j", j}}, {x(i, j), z(i, j)}, {z(i, j), x(i, j)});
  });
  stvh_z_relations(b);
}

// M_n lam relations shared with STVP_n, instantiated over the sub_m
// alphabet.
void m_lam_relations(Builder& b) {
  int n = b.n;
  for_distinct2(n, [&](int i, int j) {
    b.add("(45)", {{"i", i}, {"j", j}}, {lam(i, j), lam_inv(i, j)}, {});
  });
  for_distinct4(n, [&](int i, int j, int k, int l) {
    b.add("(46)", {{"i", i}, {"j", j}, {"k", k}, {"l", l}}, {lam(i, j), lam(k, l)},
          {lam(k, l), lam(i, j)});
  });
  for_distinct3(n, [&](int i, int j, int k) {
    b.add("(47)", {{"i", i}, {"j", j}, {"k", k}}, {lam(k, i), lam(k, j), lam(i, j)},
          {lam(i, j), lam(k, j), lam(k, i)});
  });
  for_distinct3(n, [&](int i, int j, int k) {
    b.add("(48)", {{"i", i}, {"j", j}, {"k", k}}, {lam(i, j), gamma(k)},
          {gamma(k), lam(i, j)});
  });
  for_distinct2(n, [&](int i, int j) {
    b.add("(49)", {{"i", i}, {"j", j}}, {lam(i, j)},
          {gamma(i), gamma(j), lam(j, i), gamma(j), gamma(i)});
  });
}

// M_n mixed relations (69)-(72).  (71) is read with all four
// letters pairwise distinct; the bound-l alternative is flagged in reports.
void m_mixed_relations(Builder& b) {
  int n = b.n;
  for_distinct4(n, [&](int i, int j, int k, int l) {
    b.add("(69)", {{"i", i}, {"j", j}, {"k", k}, {"l", l}}, {lam(i, j), z(k, l)},
          {z(k, l), lam(i, j)});
  });
  for_distinct3(n, [&](int i, int j, int k) {
    b.add("(70)", {{"i", i}, {"j", j}, {"k", k}}, {lam(i, k), lam(j, k), z(j, i)},
          {z(j, i), lam(i, k), lam(j, k)});
  });
  for_distinct4(n, [&](int i, int j, int k, int l) {
    b.add("(71)", {{"i", i}, {"j", j}, {"k", k}, {"l", l}}, {lam(i, k), lam(i, j), z(k, l)},
          {z(k, l), lam(i, k), lam(i, j)});
  });
  for_distinct2(n, [&](int i, int j) {
    b.add("(72)", {{"i", i}, {"j", j}}, {lam(i, j), z(j, i)}, {z(i, j), lam(i, j)});
  });
}

// The pure group STVPG_n.  Group context, so both inverse law
// orders are present; the listed relations are (46)-(56).
void stvpg_relations(Builder& b) {
  int n = b.n;
  for_distinct2(n, [&](int i, int j) {
    b.add("(45)", {{"i", i}, {"inv", 0}, {"j", j}}, {lam(i, j), lam_inv(i, j)}, {});
    b.add("(45)", {{"i", i}, {"inv", 1}, {"j", j}}, {lam_inv(i, j), lam(i, j)}, {});
  });
  stvp_tail_relations(b);
}

}  // namespace

Presentation build_presentation(Family f, int n) {
  if (n < 2) throw std::invalid_argument("build_presentation: n must be at least 2");
  if (f == Family::stvb_reduced && n < 5) {
    throw std::invalid_argument(
        "the reduced presentation is only stated for n >= 5; small-n forms are unknown");
  }
  Builder b{n, family_alphabet(f), {}, {}};
  switch (f) {
    case Family::tvb:
      tvb_relations(b);
      break;
    case Family::stvb_full:
      tvb_relations(b);
      singular_relations(b);
      break;
    case Family::stvg:
      tvb_relations(b);
      singular_relations(b);
      stvg_bar_relations(b);
      break;
    case Family::stvb_reduced:
      reduced_relations(b);
      break;
    case Family::stvp:
      gamma_relations(b);
      stvp_relations(b);
      break;
    case Family::stvh:
      gamma_relations(b);
      stvh_relations(b);
      break;
    case Family::m:
      gamma_relations(b);
      m_lam_relations(b);
      stvh_z_relations(b);
      m_mixed_relations(b);
      break;
    case Family::stvpg:
      gamma_relations(b);
      stvpg_relations(b);
      break;
  }
  return Presentation{f, n, b.tag, std::move(b.rels)};
}

std::size_t count_relations(const Presentation& p) { return p.relations.size(); }

std::vector<std::string> family_labels(Family f) {
  const std::vector<std::string> tvb_list = {
      "rel-height-ss", "rel-sss", "rel-inverse-v", "rel-height-vv", "rel-vvv",
      "rel-height-sv", "rel-vsv", "rel-inverse-b", "rel-height-bb", "rel-height-bv",
      "rel-height-sb", "rel-bv", "rel-twist-III"};
  const std::vector<std::string> singular_list = {
      "rel-height-ss1", "rel-height-vv2", "rel-height-sv1", "rel-height-sv2",
      "rel-sss1", "rel-sss2", "rel-height-vv1", "rel-vvv1", "1rel-height-sb",
      "1rel-twist-III"};
  auto join = [](std::vector<std::string> a, const std::vector<std::string>& tail) {
    a.insert(a.end(), tail.begin(), tail.end());
    return a;
  };
  switch (f) {
    case Family::tvb:
      return tvb_list;
    case Family::stvb_full:
      return join(tvb_list, singular_list);
    case Family::stvg:
      return join(join(tvb_list, singular_list),
                  {"bar-rel-height-vv1", "bar-1rel-height-sb", "bar-rel-height-sv2",
                   "bar-rel-vvv1", "bar-rel-sss1", "bar-rel-sss2", "bar-1rel-twist-III",
                   "bar-tau-inverse", "bar-rel-height-vv2", "bar-mixed-height-vv2"});
    case Family::stvb_reduced:
      return {"rel-inverse-v", "rel-height-vv", "rel-vvv", "relB-height-ss", "relB-sss",
              "relB-height-sv", "relB-inverse-b", "relB-height-bv", "relB-height-bb",
              "relB-height-sb", "relB-bv", "relB-sigma", "relB-tausigma", "relB-vtau",
              "relB-tau-ss", "relB-tau-s-comm", "relB-tau-tau-comm", "relB-height-sb2",
              "relB-bv2"};
    case Family::stvp:
      return {"rel-inverse-b", "rel-height-bb", "(45)", "(46)", "(47)", "(48)", "(49)",
              "(50)", "(51)", "(52)", "(53)", "(54)", "(55)", "(56)"};
    case Family::stvh:
      return {"rel-inverse-b", "rel-height-bb", "(57)", "(58)", "(59)", "(60)", "(61)",
              "(62)", "(63)", "(64)", "(65)", "(66)", "(67)", "(68)"};
    case Family::m:
      return {"rel-inverse-b", "rel-height-bb", "(45)", "(46)", "(47)", "(48)", "(49)",
              "(66)", "(67)", "(68)", "(69)", "(70)", "(71)", "(72)"};
    case Family::stvpg:
      return {"rel-inverse-b", "rel-height-bb", "(45)", "(46)", "(47)", "(48)", "(49)",
              "(50)", "(51)", "(52)", "(53)", "(54)", "(55)", "(56)"};
  }
  return {};
}

std::string to_text(const Presentation& p) {
  std::string out;
  for (const Relation& r : p.relations) {
    out += r.label;
    out += " | ";
    out += format_word(r.lhs);
    out += " = ";
    out += format_word(r.rhs);
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const Presentation& p) {
  nlohmann::json rels = nlohmann::json::array();
  for (const Relation& r : p.relations) {
    rels.push_back({{"label", r.label},
                    {"indices", binding_string(r.binding)},
                    {"left", format_word(r.lhs)},
                    {"right", format_word(r.rhs)}});
  }
  return {{"family", family_name(p.family)},
          {"n", p.n},
          {"alphabet", alphabet_name(p.tag)},
          {"relations", rels}};
}

}  // namespace stvb
