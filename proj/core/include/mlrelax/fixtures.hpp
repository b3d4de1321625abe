#pragma once

#include "mlrelax/linearization.hpp"
#include "mlrelax/model.hpp"
#include "mlrelax/polyhedra.hpp"
#include "mlrelax/relaxations.hpp"

namespace mlrelax::fixtures {

// Four variables, E = {{1,2,3},{2,3,4},{1,2}}.
Hypergraph fig1_hypergraph();
// min z123 + z234 + z12 over {0,1}^4.
MultilinearInstance fig1_instance();
Linearization fig1_standard();        // (b): every edge split into singletons
Linearization fig1_mccormick();       // (c): 123 -> 1,23 ; 234 -> 23,4
Linearization fig1_nonpartitioning(); // (d): 123 -> 12,23 ; 234 -> 23,4
Point fig1_z1();
Point fig1_z2();
Point fig1_z3();

// u1 = 1, u2 = 2, v_i = 2 + i; E = {{u1,u2,v_i} : i = 1..k}.
Hypergraph fig2_hypergraph(int k);

Hypergraph fig3a_hypergraph();
Linearization fig3a_linearization();
Linearization fig3b_linearization();

// 15 variables; center {1..10}.
Hypergraph fig4_hypergraph();
ExtendedFlower fig4_flower();

}  // namespace mlrelax::fixtures
