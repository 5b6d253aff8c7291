"""Structural validation of rings and trees, and what breaking them reports.

Violations come back as data (element id, rule, message) in a deterministic
order, so tooling can diff them; nothing raises during validation itself.
"""

from fiberplan import load_network, validate_network
from fiberplan.data import sleman_path
from fiberplan.model import Network, Node, Span, Topology


def show(title: str, net: Network) -> None:
    print(title)
    violations = validate_network(net)
    if not violations:
        print("  (valid)")
    for violation in violations:
        print(f"  {violation.element}: {violation.rule}: {violation.message}")
    print()


def main() -> None:
    doc = load_network(sleman_path())
    ring = doc.network
    show("Bundled seven-node ring:", ring)

    # Drop one span: two nodes fall to degree 1 and the cycle opens.
    broken = Network(
        nodes=ring.nodes, spans=ring.spans[:-1], topology=ring.topology,
        losses=ring.losses, transceiver=ring.transceiver,
    )
    show("Same ring with one span removed:", broken)

    # Point a span at a node that does not exist.
    fiber = ring.spans[0].fiber
    dangling = Network(
        nodes=ring.nodes,
        spans=ring.spans[:-1] + (
            Span(id="07-gamping-seyegan", from_node="gamping", to_node="seyegn", length=11.66, fiber=fiber),
        ),
        topology=ring.topology, losses=ring.losses, transceiver=ring.transceiver,
    )
    show("Same ring with a misspelled node reference:", dangling)

    # A small GPON-style distribution tree hanging off one head node.
    nodes = tuple(Node(n, n.title()) for n in ["olt", "cab-a", "cab-b", "onu-1", "onu-2"])
    spans = (
        Span(id="01-olt-caba", from_node="olt", to_node="cab-a", length=4.0, fiber=fiber),
        Span(id="02-olt-cabb", from_node="olt", to_node="cab-b", length=6.5, fiber=fiber),
        Span(id="03-caba-onu1", from_node="cab-a", to_node="onu-1", length=1.2, fiber=fiber),
        Span(id="04-caba-onu2", from_node="cab-a", to_node="onu-2", length=2.1, fiber=fiber),
    )
    tree = Network(
        nodes=nodes, spans=spans, topology=Topology.TREE,
        losses=ring.losses, transceiver=ring.transceiver, head="olt",
    )
    show("Distribution tree rooted at the head node:", tree)

    # Join the two cabinets: the tree now carries a cycle.
    looped = Network(
        nodes=nodes,
        spans=spans + (Span(id="05-caba-cabb", from_node="cab-a", to_node="cab-b", length=3.0, fiber=fiber),),
        topology=Topology.TREE, losses=ring.losses, transceiver=ring.transceiver, head="olt",
    )
    show("Same tree with a cabinet-to-cabinet tie added:", looped)


if __name__ == "__main__":
    main()
