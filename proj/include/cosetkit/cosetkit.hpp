#pragma once

#include "cosetkit/acyclicity.hpp"
#include "cosetkit/catalog.hpp"
#include "cosetkit/cayley.hpp"
#include "cosetkit/coset.hpp"
#include "cosetkit/coset_path.hpp"
#include "cosetkit/covering.hpp"
#include "cosetkit/duality.hpp"
#include "cosetkit/error.hpp"
#include "cosetkit/format.hpp"
#include "cosetkit/group.hpp"
#include "cosetkit/hypergraph.hpp"
#include "cosetkit/io.hpp"
#include "cosetkit/verify.hpp"
