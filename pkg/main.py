#!/usr/bin/env python3
"""
Main entry point for HarmoniTree

Runs the command-line application; see `python main.py --help`.
"""

def main():
    """Main application entry point"""
    try:
        import src.app
        src.app.start()
    except SystemExit:
        raise
    except KeyboardInterrupt:
        import sys
        print("Interrupted", file=sys.stderr)
        sys.exit(130)
    except Exception as e:
        import sys
        import traceback

        # Unexpected errors are bugs: show the traceback and fail
        print("Error running HarmoniTree:", file=sys.stderr)
        print(f"{str(e)}", file=sys.stderr)
        traceback.print_exc()
        sys.exit(1)

if __name__ == "__main__":
    main()
