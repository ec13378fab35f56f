from tevelev.cli import main

raise SystemExit(main())
