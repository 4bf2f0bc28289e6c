"""Generation of T-equivalent pairs from a certified quaternion by rotor attachment."""

from tforge.phigen.attach import (
    CycleRotorAssignment,
    GeneratedPair,
    NewMemberVerdict,
    RotorChoice,
    attach_rotors,
    attach_rotors_with_witness,
    choose_rotor,
    claw_rotor,
    cycle_rotor,
    default_menu,
    extend_witness,
    generate,
    path_rotor,
    pendant_triangle_rotor,
    rotor_by_name,
    run_pipeline,
    triangle_rotor,
    verify_new_member,
)
from tforge.phigen.digraph import (
    CyclePairingVerdict,
    PsiDigraph,
    build_psi_digraph,
    check_cycle_pairing,
    check_dig1,
    cycle_arcs,
    directed_cycles,
)
from tforge.phigen.files import WitnessDocument, read_witness, write_witness
from tforge.phigen.witness import (
    PhiWitness,
    certify_phi_prime,
    enumerate_phi_witnesses,
    iter_phi_witnesses,
    path_seed,
)

__all__ = [
    "CycleRotorAssignment",
    "CyclePairingVerdict",
    "GeneratedPair",
    "NewMemberVerdict",
    "PhiWitness",
    "PsiDigraph",
    "RotorChoice",
    "WitnessDocument",
    "attach_rotors",
    "attach_rotors_with_witness",
    "build_psi_digraph",
    "certify_phi_prime",
    "check_cycle_pairing",
    "check_dig1",
    "choose_rotor",
    "claw_rotor",
    "cycle_arcs",
    "cycle_rotor",
    "default_menu",
    "directed_cycles",
    "enumerate_phi_witnesses",
    "extend_witness",
    "generate",
    "iter_phi_witnesses",
    "path_rotor",
    "path_seed",
    "pendant_triangle_rotor",
    "read_witness",
    "rotor_by_name",
    "run_pipeline",
    "triangle_rotor",
    "verify_new_member",
    "write_witness",
]
