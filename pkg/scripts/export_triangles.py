import argparse
import os

from carlitz_toolbox.triangles import TRIANGLES


def export_triangles(out_dir, max_m):
    os.makedirs(out_dir, exist_ok=True)
    for name, cls in TRIANGLES.items():
        triangle = cls()
        with open(os.path.join(out_dir, f"{name}.csv"), "w") as f:
            f.write(triangle.to_csv(max_m))
        with open(os.path.join(out_dir, f"{name}.json"), "w") as f:
            f.write(triangle.to_json(max_m) + "\n")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out_dir", type=str, default="triangles")
    parser.add_argument("--max_m", type=int, default=12)

    args = parser.parse_args()
    export_triangles(args.out_dir, args.max_m)


if __name__ == "__main__":
    main()
