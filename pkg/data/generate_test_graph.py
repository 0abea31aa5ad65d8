import random
import argparse

import networkx as nx


def generate_connected_graph(vertices, extra_edges, rng):
    # Random spanning tree first so the result is connected
    tree = nx.random_labeled_tree(vertices, seed=rng.randrange(2 ** 32))
    graph = nx.Graph(tree)
    missing = [(u, v) for u in range(vertices) for v in range(u + 1, vertices) if not graph.has_edge(u, v)]
    rng.shuffle(missing)
    graph.add_edges_from(missing[:extra_edges])
    return graph


def generate_ring(copies, part_size, rng):
    """Copies of a random 2-connected part glued in a cycle, a of each copy meeting b of the previous."""
    while True:
        part = generate_connected_graph(part_size, part_size, rng)
        if nx.is_biconnected(part):
            break
    edges = []
    for i in range(copies):
        def name(v):
            if v == 0:
                return f"a{i}"
            if v == 1:
                return f"a{(i + 1) % copies}"
            return f"v{v}_{i}"
        edges.extend((name(u), name(v)) for u, v in part.edges)
    return nx.Graph(edges)


def write_edge_list(graph, filename):
    with open(filename, 'w', encoding='utf-8') as f:
        f.write(f"# {graph.number_of_nodes()} vertices, {graph.number_of_edges()} edges\n")
        for u, v in sorted((str(u), str(v)) for u, v in graph.edges):
            f.write(f"{u} {v}\n")

    print(f"Filename: {filename}")
    print(f"Vertices: {graph.number_of_nodes()}")
    print(f"Edges: {graph.number_of_edges()}")


def parse_arguments():
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(
        description="Generate a random connected graph as an edge list.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
  Examples:
  python generate_test_graph.py                          # 12 vertices, 6 extra edges, graph.txt
  python generate_test_graph.py -n 30 -e 20              # Denser graph
  python generate_test_graph.py --ring 8 --part 5        # Ring of 8 glued copies of a 5-vertex part
  python generate_test_graph.py -f big.txt --seed 7      # Reproducible output
  """
    )

    parser.add_argument(
        '-f', '--filename',
        default='graph.txt',
        help='Output filename (default: graph.txt)'
    )

    parser.add_argument(
        '-n', '--vertices',
        type=int,
        default=12,
        help='Number of vertices (default: 12)'
    )

    parser.add_argument(
        '-e', '--extra-edges',
        type=int,
        default=6,
        help='Edges added on top of a spanning tree (default: 6)'
    )

    parser.add_argument(
        '--ring',
        type=int,
        help='Glue this many copies of a random part in a cycle instead'
    )

    parser.add_argument(
        '--part',
        type=int,
        default=4,
        help='Vertices per ring part (default: 4)'
    )

    parser.add_argument(
        '--seed',
        type=int,
        help='Random seed for reproducible output (optional)'
    )

    return parser.parse_args()


if __name__ == "__main__":
    args = parse_arguments()

    rng = random.Random(args.seed)
    if args.seed is not None:
        print(f"Using random seed: {args.seed}")

    # Validate arguments
    if args.vertices < 2:
        print("Error: A graph needs at least 2 vertices")
        exit(1)

    if args.ring is not None:
        if args.ring < 2 or args.part < 3:
            print("Error: A ring needs at least 2 copies of a part with at least 3 vertices")
            exit(1)
        graph = generate_ring(args.ring, args.part, rng)
    else:
        graph = generate_connected_graph(args.vertices, args.extra_edges, rng)

    write_edge_list(graph, args.filename)
