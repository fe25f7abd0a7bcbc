"""Starts a clause-arena game server with small throwaway checkpoints.

Used by the frontend end-to-end tests: builds a tiny model pool in a temp
directory, serves the HTTP API on the requested port, and prints READY once
listening. The parent process owns the lifetime and kills us when done.
"""

import argparse
import sys
import tempfile
from pathlib import Path

import numpy as np
import uvicorn

from clause_arena import agent, diffnet as dn, meta, server

TINY = dict(mlp_hidden=8, mlp_out=8, embed_dim=4, gru_hidden=12, gru_layers=2)


def build_models(out: Path) -> None:
    for seed, (name, tag, roles) in enumerate([
        ("pp.json", "pp", ["prosocial", "prosocial"]),
        ("ss.json", "ss", ["selfish", "selfish"]),
        ("sp-ps.json", "sp-ps", ["selfish", "prosocial"]),
    ], start=1):
        rng = np.random.default_rng(seed)
        store, specs = agent.build_policy_store(rng, **TINY)
        dn.save_checkpoint(store, out / name, behavior_tag=tag,
                           hyperparameters={}, layer_specs=specs,
                           training_meta={"roles": roles, "final_scores": [0, 0]})
    rng = np.random.default_rng(99)
    store, specs = meta.build_selector_store(rng, **TINY)
    dn.save_checkpoint(store, out / "meta.json", behavior_tag="meta",
                       hyperparameters={}, layer_specs=specs,
                       training_meta={"roles": ["meta", "pool"],
                                      "final_scores": [0, 0, 0, 0]})


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--port", type=int, required=True)
    parser.add_argument("--reveal-tag", action="store_true")
    args = parser.parse_args()

    with tempfile.TemporaryDirectory() as tmp:
        root = Path(tmp)
        models = root / "models"
        models.mkdir()
        build_models(models)
        app = server.create_app(models, root / "logs", blind=not args.reveal_tag)
        config = uvicorn.Config(app, host="127.0.0.1", port=args.port,
                                log_level="warning")
        httpd = uvicorn.Server(config)

        # signal readiness as soon as the socket is bound
        orig_startup = httpd.startup

        async def startup(**kwargs):
            await orig_startup(**kwargs)
            print("READY", flush=True)

        httpd.startup = startup
        httpd.run()
    return 0


if __name__ == "__main__":
    sys.exit(main())
