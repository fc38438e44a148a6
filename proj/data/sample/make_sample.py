import networkx as nx, random, math

def write(name, g, domain, rows):
    g = nx.convert_node_labels_to_integers(g.subgraph(max(nx.connected_components(g), key=len)).copy())
    with open(f"{name}.edges", "w") as f:
        for u, v in sorted(tuple(sorted(e)) for e in g.edges()):
            f.write(f"{u} {v}\n")
    rows.append((name, f"{name}.edges", domain))

rows = []
write("karate", nx.karate_club_graph(), "social", rows)
write("florentine", nx.florentine_families_graph(), "social", rows)
write("lesmis", nx.les_miserables_graph(), "social", rows)
write("davis", nx.davis_southern_women_graph(), "social", rows)
rnd = random.Random(7)
pts = [(rnd.random(), rnd.random()) for _ in range(45)]
g = nx.random_geometric_graph(45, 0.25, pos=dict(enumerate(pts)), seed=7)
write("proximity45", g, "social", rows)

def niche(n, c, seed):
    r = random.Random(seed)
    g = nx.Graph(); g.add_nodes_from(range(n))
    beta = 1 / (2 * c) - 1
    niches = [r.random() for _ in range(n)]
    for i, ni in enumerate(niches):
        width = ni * (1 - (1 - r.random()) ** (1 / beta))
        centre = r.uniform(width / 2, ni)
        for j, nj in enumerate(niches):
            if i != j and abs(nj - centre) <= width / 2:
                g.add_edge(i, j)
    return g

for i, (n, c) in enumerate([(30, 0.12), (35, 0.1), (40, 0.15), (28, 0.14), (45, 0.09)]):
    write(f"foodweb{i+1}", niche(n, c, 100 + i), "food", rows)

def modular(modules, size, k, between, seed):
    r = random.Random(seed)
    g = nx.Graph()
    for m in range(modules):
        base = m * size
        for a in range(size):
            for d in range(1, k // 2 + 1):
                g.add_edge(base + a, base + (a + d) % size)
    n = modules * size
    for _ in range(between):
        u, v = r.randrange(n), r.randrange(n)
        if u // size != v // size:
            g.add_edge(u, v)
    return g

for i, (mods, size, k, b) in enumerate([(3, 12, 4, 10), (4, 10, 4, 14), (4, 14, 6, 20), (5, 9, 4, 16), (3, 20, 6, 18)]):
    write(f"cortex{i+1}", modular(mods, size, k, b, 200 + i), "brain", rows)

# Heavy-atom skeletons of small molecules.
mol = {
    "benzene": [(0,1),(1,2),(2,3),(3,4),(4,5),(5,0)],
    "naphthalene": [(0,1),(1,2),(2,3),(3,4),(4,5),(5,0),(4,6),(6,7),(7,8),(8,9),(9,3)],
    "caffeine": [(0,1),(1,2),(2,3),(3,4),(4,5),(5,0),(3,6),(6,7),(7,8),(8,4),(0,9),(1,10),(2,11),(5,12),(8,13)],
    "aspirin": [(0,1),(1,2),(2,3),(3,4),(4,5),(5,0),(0,6),(6,7),(6,8),(1,9),(9,10),(10,11),(10,12)],
    "ibuprofen": [(0,1),(1,2),(2,3),(3,4),(4,5),(5,0),(0,6),(6,7),(6,8),(8,9),(8,10),(3,11),(11,12),(12,13),(12,14)],
}
for name, edges in mol.items():
    write(name, nx.Graph(edges), "chems", rows)

with open("manifest.csv", "w") as f:
    f.write("name,path,domain\n")
    for r in rows:
        f.write(",".join(r) + "\n")
for r in rows:
    g = nx.read_edgelist(r[1])
    print(r[0], g.number_of_nodes(), g.number_of_edges())
